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

#include "tridm/closed_form.hpp"
#include "tridm/density_matrix.hpp"

namespace tridm {

struct ValidationGrids {
  std::vector<double> kappa;
  std::vector<double> dz;
  std::vector<double> t;
};

ValidationGrids default_validation_grids();

/// One record per (kappa, dz, t, pair): the closed-form health metrics plus
/// the Frobenius gap between the two propagators' marginals at that point.
struct ValidationRecord {
  double kappa = 0.0;
  double dz = 0.0;
  double t = 0.0;
  PartitionId pair = PartitionId::AB;
  ValidityReport report;
  double propagator_gap = 0.0;  // ||exact marginal - factorized marginal||_F
};

struct PairSummary {
  PartitionId pair = PartitionId::AB;
  double max_trace_deviation = 0.0;
  double mean_trace_deviation = 0.0;
  double max_hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;  // most negative seen
  double max_distance_exact = 0.0;
  double max_distance_factorized = 0.0;
};

struct ValidationReport {
  ValidationGrids grids;
  std::vector<ValidationRecord> records;
  std::vector<PairSummary> summaries;          // AB, AC, BC
  double max_commuting_propagator_gap = 0.0;   // over dz == 0 grid points
  double max_propagator_gap = 0.0;             // over all grid points
};

/// Evaluate the closed-form element formulas on the grid (under the pinned
/// alpha=pi/3, gamma=pi/2, omega=2 convention) and compare each X-matrix to
/// both propagator-derived marginals. Findings are data, never thrown.
ValidationReport validate_closed_forms(const ValidationGrids& grids);

}  // namespace tridm
