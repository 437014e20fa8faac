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

#include "tridm/validation.hpp"

#include <cmath>

#include "tridm/eig.hpp"
#include "tridm/errors.hpp"
#include "tridm/model.hpp"

namespace tridm {

ValidationGrids default_validation_grids() {
  ValidationGrids g;
  g.kappa = {0.0, 0.3, 0.5, 0.7, 0.9, 1.0};
  g.dz = {0.0, 0.5, 0.9};
  for (int i = 0; i <= 20; ++i) g.t.push_back(0.25 * i);
  return g;
}

ValidationReport validate_closed_forms(const ValidationGrids& grids) {
  if (grids.kappa.empty() || grids.dz.empty() || grids.t.empty()) {
    throw DomainError("validation grids must be nonempty");
  }

  ValidationReport out;
  out.grids = grids;
  const PartitionId pairs[] = {PartitionId::AB, PartitionId::AC, PartitionId::BC};
  for (PartitionId p : pairs) {
    PairSummary s;
    s.pair = p;
    out.summaries.push_back(s);
  }

  for (double kappa : grids.kappa) {
    for (double dz : grids.dz) {
      const SystemParams conv = closed_form_convention(kappa, dz);
      const DensityMatrix rho0 = initial_state(conv);
      for (double t : grids.t) {
        const DensityMatrix rho_exact = evolve(rho0, exact_propagator(conv, t));
        const DensityMatrix rho_fact = evolve(rho0, factorized_propagator(conv, t));
        for (std::size_t pi = 0; pi < 3; ++pi) {
          const PartitionId pair = pairs[pi];
          const ComplexMatrix cf = closed_form_matrix(kappa, dz, t, pair);
          const ComplexMatrix me = marginal(rho_exact, pair).matrix();
          const ComplexMatrix mf = marginal(rho_fact, pair).matrix();

          ValidationRecord rec;
          rec.kappa = kappa;
          rec.dz = dz;
          rec.t = t;
          rec.pair = pair;
          rec.report.trace_deviation = std::abs(cf.trace() - Complex(1.0, 0.0));
          rec.report.hermiticity_deviation = cf.hermiticity_deviation();
          ComplexMatrix herm(cf.dim());
          for (int r = 0; r < cf.dim(); ++r)
            for (int c = 0; c < cf.dim(); ++c) herm(r, c) = 0.5 * (cf(r, c) + std::conj(cf(c, r)));
          rec.report.min_eigenvalue = hermitian_eig(herm).eigenvalues.back();
          rec.report.distance_exact = (cf - me).frobenius_norm();
          rec.report.distance_factorized = (cf - mf).frobenius_norm();
          rec.propagator_gap = (me - mf).frobenius_norm();

          PairSummary& s = out.summaries[pi];
          s.max_trace_deviation = std::max(s.max_trace_deviation, rec.report.trace_deviation);
          s.mean_trace_deviation += rec.report.trace_deviation;
          s.max_hermiticity_deviation =
              std::max(s.max_hermiticity_deviation, rec.report.hermiticity_deviation);
          s.min_eigenvalue = std::min(s.min_eigenvalue, rec.report.min_eigenvalue);
          s.max_distance_exact = std::max(s.max_distance_exact, rec.report.distance_exact);
          s.max_distance_factorized =
              std::max(s.max_distance_factorized, rec.report.distance_factorized);

          out.max_propagator_gap = std::max(out.max_propagator_gap, rec.propagator_gap);
          if (dz == 0.0) {
            out.max_commuting_propagator_gap =
                std::max(out.max_commuting_propagator_gap, rec.propagator_gap);
          }
          out.records.push_back(rec);
        }
      }
    }
  }
  const double per_pair = static_cast<double>(out.records.size()) / 3.0;
  for (PairSummary& s : out.summaries) s.mean_trace_deviation /= per_pair;
  return out;
}

}  // namespace tridm
