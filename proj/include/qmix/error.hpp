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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmix {

enum class ErrorKind {
  DimensionMismatch,
  CompletenessViolation,
  NonPositiveChoi,
  NotPrimitive,
  NonPositiveFixedPoint,
  NonHermitianHamiltonian,
  NegativeTime,
  InvalidState,
  DomainError,
  ParameterOutOfRange,
  SingularSigma,
  SingularOperator,
  SingularP,
  InfiniteChi2,
  NoStationaryState,
  PositiveSpectrum,
  NotStochastic,
  InvalidDistribution,
  NotUnital,
  NotQubit,
  ParseError,
  ValidationError,
  UnknownSuite,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers branch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Numerical tolerances shared by validation routines. Every operation that
/// validates input accepts an override.
struct Tolerances {
  double cpt = 1e-9;    // completeness / trace preservation
  double herm = 1e-10;  // Hermiticity
  double psd = 1e-10;   // smallest admissible eigenvalue is -psd
  double tr = 1e-10;    // unit trace
  double spec = 1e-8;   // peripheral spectrum detection
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qmix
