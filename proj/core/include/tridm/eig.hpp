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

#include <vector>

#include "tridm/complex_matrix.hpp"

namespace tridm {

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

/// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
/// Deterministic for a fixed input; eigenvalues descending, V orthonormal.
/// Throws NotHermitianError when the input fails the 1e-9 Hermiticity check.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// All eigenvalues of a general complex matrix (dim <= 8), unordered.
/// Householder Hessenberg reduction followed by shifted QR with deflation;
/// no randomization, so results are identical across runs.
/// Throws NoConvergenceError with residual diagnostics if QR stalls.
std::vector<Complex> general_eigvals(const ComplexMatrix& m);

/// exp(-i h t) for Hermitian h, evaluated through the eigendecomposition.
/// Unitary to well below 1e-10 for the dimensions used here.
ComplexMatrix expm_hermitian_times_minus_i_t(const ComplexMatrix& h, double t);

/// Max-entry deviation of u from unitarity, max |(u^dag u - I)_ij|.
double unitarity_deviation(const ComplexMatrix& u);

}  // namespace tridm
