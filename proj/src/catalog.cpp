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


#include "qmix/catalog.hpp"

#include "qmix/geometry.hpp"

#include <cmath>

namespace qmix {

QuantumChannel paper_qubit_channel() {
  Matrix a1(2, 2), a2(2, 2);
  a1 << 1.0, 1.0, 0.0, 0.0;
  a2 << 1.0, -1.0, 1.0, -1.0;
  return QuantumChannel::from_kraus({a1 / std::sqrt(2.0), a2 / 2.0});
}

Matrix paper_qubit_fixed_point() {
  Matrix s(2, 2);
  s << 5.0, 1.0, 1.0, 1.0;
  return s / 6.0;
}

QuantumChannel depolarizing_channel(Index dim, double p) {
  const double n = static_cast<double>(dim);
  const Matrix id = Matrix::Identity(dim * dim, dim * dim);
  // vec(1) vec(1)^T maps X to tr(X) 1.
  const Vector one = vec(Matrix::Identity(dim, dim));
  const Matrix s = (1.0 - p) * id + (p / n) * one * one.transpose();
  return QuantumChannel::from_superoperator(Superoperator(s));
}

QuantumChannel pauli_depolarizing_channel(double p) {
  const double w = std::sqrt(p / 3.0);
  return QuantumChannel::from_kraus({std::sqrt(1.0 - p) * pauli(0), w * pauli(1), w * pauli(2), w * pauli(3)});
}

QuantumChannel dephasing_channel(double p) {
  return QuantumChannel::from_kraus({std::sqrt(1.0 - p) * pauli(0), std::sqrt(p) * pauli(3)});
}

QuantumChannel z_rotation_channel(double theta) {
  Matrix u = Matrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, -theta / 2.0);
  u(1, 1) = std::polar(1.0, theta / 2.0);
  return QuantumChannel::unitary(u);
}

QuantumChannel defective_qubit_channel() {
  BlochChannel b;
  b.t.setZero();
  b.l << 0.5, 0.6, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.3;
  return QuantumChannel::from_superoperator(b.to_superoperator());
}

Liouvillian damped_qubit_generator(double gamma, double kappa) {
  Matrix lower = Matrix::Zero(2, 2);
  lower(0, 1) = std::sqrt(gamma);
  std::vector<Matrix> jumps{lower};
  const double w = std::sqrt(kappa) / 2.0;
  for (int i = 1; i <= 3; ++i) jumps.push_back(w * pauli(i));
  return Liouvillian(Matrix::Zero(2, 2), jumps);
}

}  // namespace qmix
