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

#include "tridm/density_matrix.hpp"

namespace tridm {

/// Which reading of the "non-local information" quantity to emit. The
/// operational (purity-affine) total information is the default: it is the
/// unique affine-in-purity measure reaching 2 on pure two-qubit states and
/// 3 on pure three-qubit states. The subtract-local variant removes the
/// single-qubit contributions and vanishes on product states.
enum class InfoMode { total, total_minus_local };

const char* info_mode_name(InfoMode m);
InfoMode info_mode_from_string(const std::string& s);  // throws DomainError

/// All quantifiers of one state at one time point.
struct MeasureSet {
  double concurrence = 0.0;
  double negativity = 0.0;
  double eof = 0.0;
  double purity = 0.0;
  double info_total = 0.0;
  double info_nonlocal = 0.0;
};

/// Shannon binary entropy H(x) = -x log2 x - (1-x) log2(1-x), with the
/// continuity convention H(0) = H(1) = 0. Accepts x in [-1e-12, 1+1e-12]
/// (clamped); anything further out throws DomainError.
double binary_entropy(double x);

/// Wootters concurrence of a two-qubit state: eigenvalues of
/// rho (sy sy) rho* (sy sy), square-rooted, sorted descending, combined as
/// max(0, s1 - s2 - s3 - s4). Eigenvalue hygiene: imaginary parts above
/// 1e-8 or real parts below -1e-6 raise MeasureDomainError; small negative
/// real parts are clamped to zero.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation, the binary-entropy transform of concurrence.
double eof(const DensityMatrix& rho);

/// Negativity: twice the absolute sum of the negative eigenvalues of the
/// partial transpose. Subsystem choice does not affect the spectrum.
double negativity(const DensityMatrix& rho);

/// Operational total information n * (2^n / (2^n - 1)) * (tr rho^2 - 2^-n),
/// in [0, n] for valid n-qubit states (n = 1, 2 or 3).
double bz_total_information(const DensityMatrix& rho);

/// Non-local information in the requested mode (n = 2 or 3).
double nonlocal_information(const DensityMatrix& rho, InfoMode mode);

/// All quantifiers of a two-qubit state, bundled.
MeasureSet measure_all(const DensityMatrix& rho, InfoMode mode = InfoMode::total);

}  // namespace tridm
