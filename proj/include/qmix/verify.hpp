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

// Property suites run by `qmix verify`. Each property is sampled on seeded
// random inputs and reports its worst observed margin.

#pragma once

#include "qmix/io.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qmix {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  int cases = 0;
  /// Largest violation seen (<= 0 when the property held everywhere).
  double worst = -std::numeric_limits<double>::infinity();
  std::string detail;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 1;
  /// Testing hook: "omega-sign" negates every chi^2 value seen by the
  /// metric suite.
  std::string fault;
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
std::vector<PropertyResult> run_verify(const VerifyOptions& opts);

json verify_to_json(const VerifyOptions& opts, const std::vector<PropertyResult>& results);

}  // namespace qmix
