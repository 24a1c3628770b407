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

// Derivative-free local minimization (GSL simplex).

#pragma once

#include <functional>
#include <vector>

namespace qmix {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Minimizes f from x0 with initial simplex step `step`, stopping after
/// max_iter iterations or when the simplex size drops below `size_tol`.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                          double step, int max_iter, double size_tol = 1e-10);

}  // namespace qmix
