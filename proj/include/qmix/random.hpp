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

// Seeded generators for random states, channels and Markov chains.

#pragma once

#include "qmix/channel.hpp"

#include <cstdint>
#include <random>

namespace qmix {

using Rng = std::mt19937_64;

/// Entries i.i.d. complex normal with unit variance.
Matrix ginibre(Index rows, Index cols, Rng& rng);
Matrix random_hermitian(Index dim, Rng& rng);
Matrix haar_unitary(Index dim, Rng& rng);
Vector random_unit_vector(Index dim, Rng& rng);

/// G G^dag / tr with G a dim x rank Ginibre matrix.
DensityMatrix random_density(Index dim, Rng& rng, Index rank = 0);

/// Kraus operators cut from a Haar-like isometry C^d -> C^{kd}.
QuantumChannel random_channel(Index dim, Index kraus_count, Rng& rng);
/// Convex mixture of Haar unitaries.
QuantumChannel random_unital_channel(Index dim, Index unitary_count, Rng& rng);

/// Column-stochastic matrix P with strictly positive entries.
RealMatrix random_stochastic(Index n, Rng& rng);
/// Reversible column-stochastic chain built from a random symmetric weight
/// matrix; `pi` receives its stationary distribution.
RealMatrix random_reversible_chain(Index n, Rng& rng, RealVector* pi = nullptr);

}  // namespace qmix
