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

// Command implementations behind the qmix executable. Each returns the full
// output text and exit code; nothing is written until the command succeeds.

#pragma once

#include "qmix/io.hpp"
#include "qmix/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmix {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitValidation = 1, kExitProperty = 2, kExitInternal = 3 };

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
  /// Extra files (path, content), e.g. CSV tables.
  std::vector<std::pair<std::string, std::string>> files;
};

/// A channel given as a JSON file path or as a built-in name:
/// paper-qubit, depolarizing:p, identity:d, classical:<file>.
struct LoadedChannel {
  QuantumChannel channel;
  json input;  // {"name", "sha256"}
};
LoadedChannel load_channel(const std::string& spec);

/// A generator given as a JSON file path or damped-qubit:gamma:kappa.
struct LoadedGenerator {
  Liouvillian generator;
  json input;
};
LoadedGenerator load_generator(const std::string& spec);

/// maxmixed, pure0, fixed (the reference state), or a JSON file holding a
/// matrix or {"rho": matrix}.
DensityMatrix load_state(const std::string& spec, Index dim, const std::optional<DensityMatrix>& reference);

/// Maps a library error to an exit code.
int exit_code_for(const Error& e);

CommandOutput cmd_inspect(const std::string& channel);

struct MixOptions {
  std::string channel;
  std::string k = "mean-alpha:0.5";
  std::string rho0 = "pure0";
  int n = 50;
  std::optional<double> eps;
  std::optional<std::string> csv;
};
CommandOutput cmd_mix(const MixOptions& o);

CommandOutput cmd_verify(const VerifyOptions& o);

struct DbOptions {
  std::string channel;
  std::string sigma = "fixed";
  std::vector<std::string> ks;  // empty: every standard k
  bool include_matrix = false;
  double tol = 1e-9;
};
CommandOutput cmd_db(const DbOptions& o);

CommandOutput cmd_symmetrize(const std::string& channel, const std::string& sigma);

CommandOutput cmd_cheeger(const std::string& channel, bool use_map_directly);

struct ContractionOptions {
  std::string channel;
  int trials = 64;
  std::uint64_t seed = 1;
  double alpha = 0.5;
};
CommandOutput cmd_contraction(const ContractionOptions& o);

struct ContinuousOptions {
  std::string generator;
  std::string k = "mean-alpha:0.5";
  std::string rho0 = "pure0";
  double t_max = 10.0;
  double dt = 0.25;
  std::optional<std::string> csv;
};
CommandOutput cmd_continuous(const ContinuousOptions& o);

}  // namespace qmix
