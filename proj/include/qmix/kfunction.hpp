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

// The functions k that select a monotone metric. Each satisfies k(1) = 1 and
// k(1/w) = w k(w) on w > 0.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qmix {

enum class KFamily { MeanAlpha, Bures, Maximal, Log, WYD, Hansen };

class KFunction {
 public:
  /// k(w) = (w^-a + w^(a-1)) / 2, a in [0, 1].
  static KFunction mean_alpha(double alpha);
  /// k(w) = 2 / (1 + w).
  static KFunction bures();
  /// k(w) = (1 + w) / (2w).
  static KFunction maximal();
  /// k(w) = log(w) / (w - 1).
  static KFunction log();
  /// Wigner-Yanase-Dyson, a in [-1, 2] without {0, 1}.
  static KFunction wyd(double alpha);
  /// k(w) = w^-a ((1 + w) / 2)^(2a - 1), a in [0, 1].
  static KFunction hansen(double a);

  /// Parses the family names used on the command line and in JSON:
  /// mean-alpha, bures, maximal, log, wyd, hansen.
  static KFunction from_family(const std::string& family, std::optional<double> param);

  KFamily family() const { return family_; }
  std::optional<double> param() const { return param_; }
  std::string family_name() const;
  /// e.g. "mean-alpha(0.5)" or "bures".
  std::string name() const;

  double operator()(double w) const;

  friend bool operator==(const KFunction& a, const KFunction& b) {
    return a.family_ == b.family_ && a.param_ == b.param_;
  }

 private:
  KFunction(KFamily family, std::optional<double> param) : family_(family), param_(param) {}
  KFamily family_;
  std::optional<double> param_;
};

/// Throws DomainError for w <= 0 or non-finite w.
double k_eval(const KFunction& k, double w);

/// Representatives of every family used by the property suites.
std::vector<KFunction> standard_k_functions();

}  // namespace qmix
