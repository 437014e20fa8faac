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

#include "tridm/complex_matrix.hpp"
#include "tridm/density_matrix.hpp"
#include "tridm/system_params.hpp"

namespace tridm {

/// 8x8 system Hamiltonian
///   (omega/2) (sx sx I + sy sy I) + dz (sx I sy - sy I sx)
/// i.e. an XX dipole coupling between A and B plus the z component of the
/// Dzyaloshinskii-Moriya cross product between A and C. Hermitian, traceless.
ComplexMatrix build_hamiltonian(const SystemParams& p);

/// Two-qubit Werner-like initial state of the A-B pair,
///   kappa |phi_ab><phi_ab| + (1-kappa)/4 I4.
DensityMatrix initial_pair_state(const SystemParams& p);

/// Three-qubit product initial state rho_ab(0) (x) |phi_c><phi_c|.
DensityMatrix initial_state(const SystemParams& p);

/// U(t) = exp(-i H t), evaluated through the Hermitian eigendecomposition.
ComplexMatrix exact_propagator(const SystemParams& p, double t);

/// Ordered product of the four single-term exponentials
///   exp(-i (w t/2) XX) exp(-i (w t/2) YY) exp(-i dz t X.Y) exp(+i dz t Y.X).
/// The XX/YY factors commute with each other, as do the two DM factors, so
/// this reproduces exp(-i H t) exactly whenever omega = 0 or dz = 0 and is a
/// Trotter-like approximation otherwise. Always unitary.
ComplexMatrix factorized_propagator(const SystemParams& p, double t);

/// U rho U^dag. Requires matching dimensions and U unitary to 1e-9.
DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& u);

/// Reduced state of a three-qubit density matrix over the given partition
/// (pairs or single qubits; the full ABC partition is not a marginal).
DensityMatrix marginal(const DensityMatrix& rho, PartitionId part);

}  // namespace tridm
