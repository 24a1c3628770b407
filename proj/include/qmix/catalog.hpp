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

// Named channels and generators used by the CLI, the verify suites and the
// tests.

#pragma once

#include "qmix/channel.hpp"

namespace qmix {

/// Qubit channel with Kraus operators A1 = [[1,1],[0,0]]/sqrt2 and
/// A2 = [[1,-1],[1,-1]]/2. Its fixed point is [[5,1],[1,1]]/6.
QuantumChannel paper_qubit_channel();
Matrix paper_qubit_fixed_point();

/// rho -> (1 - p) rho + p tr(rho) 1/d, p in [0, 1 + 1/(d^2 - 1)].
QuantumChannel depolarizing_channel(Index dim, double p);
/// Kraus sqrt(1 - p) 1, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z.
QuantumChannel pauli_depolarizing_channel(double p);
/// Kraus sqrt(1 - p) 1, sqrt(p) Z.
QuantumChannel dephasing_channel(double p);
/// Unitary rotation exp(-i theta Z / 2).
QuantumChannel z_rotation_channel(double theta);
/// Unital qubit channel whose Pauli transfer block is the non-normal
/// [[0.5, 0.6, 0], [0, 0.5, 0], [0, 0, 0.3]].
QuantumChannel defective_qubit_channel();

/// Qubit amplitude damping at rate gamma (jump sqrt(gamma) |0><1|) plus
/// depolarizing noise at rate kappa (jumps sqrt(kappa)/2 X, Y, Z).
Liouvillian damped_qubit_generator(double gamma, double kappa);

}  // namespace qmix
