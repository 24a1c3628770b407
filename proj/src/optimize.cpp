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


#include "qmix/optimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

namespace qmix {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  const double y = f(x);
  return std::isfinite(y) ? y : std::numeric_limits<double>::max();
}

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, double step, int max_iter, double size_tol) {
  SimplexResult best;
  best.x = x0;
  best.value = f(x0);
  if (x0.empty() || max_iter <= 0) return best;

  const std::size_t n = x0.size();
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(n), gsl_vector_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> steps(gsl_vector_alloc(n), gsl_vector_free);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(steps.get(), step);

  gsl_multimin_function fn;
  fn.n = n;
  fn.f = &trampoline;
  fn.params = const_cast<Objective*>(&f);

  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n), gsl_multimin_fminimizer_free);
  static std::once_flag quiet;
  std::call_once(quiet, [] { gsl_set_error_handler_off(); });
  gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), steps.get());

  int it = 0;
  while (it < max_iter) {
    ++it;
    if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver.get()), size_tol) == GSL_SUCCESS) break;
  }

  const double value = gsl_multimin_fminimizer_minimum(solver.get());
  if (value < best.value) {
    best.value = value;
    const gsl_vector* xm = gsl_multimin_fminimizer_x(solver.get());
    for (std::size_t i = 0; i < n; ++i) best.x[i] = gsl_vector_get(xm, i);
  }
  best.iterations = it;
  return best;
}

}  // namespace qmix
