// Copyright 2026 The qmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "qmix/linalg.hpp"

#include <gtest/gtest.h>

namespace qmix::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// Superoperator of X -> sum_k A_k X A_k^dag, one column per matrix unit.
template <typename Map>
Matrix superop_by_columns(const Map& apply, Index d) {
  Matrix s(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      const Matrix out = apply(e);
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) s(a * d + b, i * d + j) = out(a, b);
    }
  return s;
}

}  // namespace qmix::testing
