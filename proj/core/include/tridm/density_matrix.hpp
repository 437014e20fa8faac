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

#pragma once

#include <string>
#include <vector>

#include "tridm/complex_matrix.hpp"

namespace tridm {

enum class PartitionId { AB, AC, BC, A, B, C, ABC };

const char* partition_name(PartitionId p);
PartitionId partition_from_string(const std::string& name);  // throws InvalidPartitionError
int partition_qubit_count(PartitionId p);
/// Qubit indices (A=0, B=1, C=2) belonging to the partition.
std::vector<int> partition_qubits(PartitionId p);

inline constexpr double kStateTraceTol = 1e-9;
inline constexpr double kStateEigTol = 1e-9;

/// A ComplexMatrix tagged with its qubit count. `checked` enforces the
/// quantum-state invariants (Hermitian to 1e-9, unit trace to 1e-9, minimum
/// eigenvalue >= -1e-9); `unchecked` skips them, which is needed for the
/// closed-form fixture matrices whose defects are reported rather than thrown.
class DensityMatrix {
 public:
  static DensityMatrix checked(ComplexMatrix m, int n_qubits);
  static DensityMatrix unchecked(ComplexMatrix m, int n_qubits);

  const ComplexMatrix& matrix() const { return m_; }
  int n_qubits() const { return n_qubits_; }
  int dim() const { return m_.dim(); }

  /// tr(rho^2), real part.
  double purity() const;

 private:
  DensityMatrix(ComplexMatrix m, int n_qubits) : m_(std::move(m)), n_qubits_(n_qubits) {}

  ComplexMatrix m_;
  int n_qubits_;
};

}  // namespace tridm
