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

/// Health metrics of a closed-form marginal, measured against the
/// propagator-derived marginal at the same (kappa, dz, t).
struct ValidityReport {
  double trace_deviation = 0.0;       // |tr - 1|
  double hermiticity_deviation = 0.0; // max |m_ij - conj(m_ji)|
  double min_eigenvalue = 0.0;        // of the Hermitian part (m + m^dag)/2
  double distance_exact = 0.0;        // Frobenius, vs exact-propagator marginal
  double distance_factorized = 0.0;   // Frobenius, vs factorized-propagator marginal
};

struct ClosedFormMarginal {
  ComplexMatrix matrix;  // the assembled X-shaped 4x4; NOT validated
  ValidityReport report;
};

/// Parameter tuple the closed-form element formulas were derived at.
/// Only kappa, dz and t remain free; alpha = pi/3, gamma = pi/2, omega = 2
/// are baked into the coefficients (the sqrt(3) factors and the 2t
/// trigonometric arguments).
SystemParams closed_form_convention(double kappa, double dz);

/// Evaluate the tabulated element formulas for one pair marginal (AB, AC or
/// BC) and assemble the X-shaped matrix. The formulas are transcribed as
/// printed, with exactly two repairs where the intent is unambiguous: every
/// bare "D" is read as dz, and the mislabeled final diagonal element of the
/// BC list is read as the BC one. Everything else, including elements that
/// break Hermiticity or unit trace, is kept verbatim; the report quantifies
/// the damage instead of throwing. Only p.kappa and p.dz are consumed.
ClosedFormMarginal closed_form_marginal(const SystemParams& p, double t, PartitionId pair);

/// Element evaluation only (no propagator comparison); cheap, used by the
/// validation campaign which batches the propagator work per grid point.
ComplexMatrix closed_form_matrix(double kappa, double dz, double t, PartitionId pair);

}  // namespace tridm
