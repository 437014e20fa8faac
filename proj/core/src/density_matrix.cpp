// Copyright 2026 the tri-dm authors
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

#include "tridm/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "tridm/eig.hpp"
#include "tridm/errors.hpp"

namespace tridm {

const char* partition_name(PartitionId p) {
  switch (p) {
    case PartitionId::AB: return "AB";
    case PartitionId::AC: return "AC";
    case PartitionId::BC: return "BC";
    case PartitionId::A: return "A";
    case PartitionId::B: return "B";
    case PartitionId::C: return "C";
    case PartitionId::ABC: return "ABC";
  }
  return "?";
}

PartitionId partition_from_string(const std::string& name) {
  if (name == "AB") return PartitionId::AB;
  if (name == "AC") return PartitionId::AC;
  if (name == "BC") return PartitionId::BC;
  if (name == "A") return PartitionId::A;
  if (name == "B") return PartitionId::B;
  if (name == "C") return PartitionId::C;
  if (name == "ABC") return PartitionId::ABC;
  throw InvalidPartitionError("unknown partition '" + name + "'");
}

int partition_qubit_count(PartitionId p) {
  switch (p) {
    case PartitionId::AB:
    case PartitionId::AC:
    case PartitionId::BC: return 2;
    case PartitionId::ABC: return 3;
    default: return 1;
  }
}

std::vector<int> partition_qubits(PartitionId p) {
  switch (p) {
    case PartitionId::AB: return {0, 1};
    case PartitionId::AC: return {0, 2};
    case PartitionId::BC: return {1, 2};
    case PartitionId::A: return {0};
    case PartitionId::B: return {1};
    case PartitionId::C: return {2};
    case PartitionId::ABC: return {0, 1, 2};
  }
  return {};
}

DensityMatrix DensityMatrix::checked(ComplexMatrix m, int n_qubits) {
  const int expected_dim = 1 << n_qubits;
  if (n_qubits < 1 || n_qubits > 3 || m.dim() != expected_dim) {
    std::ostringstream os;
    os << "DensityMatrix: dim " << m.dim() << " does not match " << n_qubits << " qubits";
    throw DimensionMismatchError(os.str());
  }
  const double hdev = m.hermiticity_deviation();
  if (hdev > kHermitianTol) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (deviation " << hdev << ")";
    throw NotHermitianError(os.str());
  }
  const double tdev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tdev > kStateTraceTol) {
    std::ostringstream os;
    os << "DensityMatrix: trace deviates from 1 by " << tdev;
    throw DomainError(os.str());
  }
  const EigenDecomposition ed = hermitian_eig(m);
  const double min_eig = ed.eigenvalues.back();
  if (min_eig < -kStateEigTol) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << min_eig;
    throw DomainError(os.str());
  }
  return DensityMatrix(std::move(m), n_qubits);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, int n_qubits) {
  return DensityMatrix(std::move(m), n_qubits);
}

double DensityMatrix::purity() const {
  // tr(rho^2) without forming the square; rho is Hermitian in practice but
  // the general formula keeps unchecked matrices honest.
  Complex s = 0.0;
  const int n = m_.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s += m_(r, c) * m_(c, r);
  return s.real();
}

}  // namespace tridm
