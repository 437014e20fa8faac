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

#include "tridm/sweep.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "tridm/closed_form.hpp"
#include "tridm/errors.hpp"
#include "tridm/model.hpp"

namespace tridm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

PartitionMeasures measure_partition(const DensityMatrix& rho_t, PartitionId part, InfoMode mode) {
  PartitionMeasures out;
  out.partition = part;
  const DensityMatrix sub = (part == PartitionId::ABC) ? rho_t : marginal(rho_t, part);
  if (sub.n_qubits() == 2) {
    out.pair = true;
    out.measures = measure_all(sub, mode);
  } else {
    out.pair = false;
    out.measures.purity = sub.purity();
    out.measures.info_total = bz_total_information(sub);
    out.measures.info_nonlocal = (sub.n_qubits() == 1)
                                     ? out.measures.info_total
                                     : nonlocal_information(sub, mode);
  }
  return out;
}

SweepRow evaluate_grid_point(const SweepConfig& cfg, const SystemParams& params, double t,
                             double x, const DensityMatrix* rho0) {
  SweepRow row;
  row.x = x;
  if (cfg.propagator == Propagator::closed_form) {
    for (PartitionId part : cfg.partitions) {
      const ComplexMatrix m = closed_form_matrix(params.kappa, params.dz, t, part);
      PartitionMeasures pm;
      pm.partition = part;
      pm.pair = true;
      pm.measures = measure_all(DensityMatrix::unchecked(m, 2), cfg.info_mode);
      row.entries.push_back(std::move(pm));
    }
    return row;
  }
  const ComplexMatrix u = (cfg.propagator == Propagator::exact)
                              ? exact_propagator(params, t)
                              : factorized_propagator(params, t);
  const DensityMatrix rho_t = evolve(*rho0, u);
  for (PartitionId part : cfg.partitions) {
    row.entries.push_back(measure_partition(rho_t, part, cfg.info_mode));
  }
  return row;
}

}  // namespace

const char* propagator_name(Propagator p) {
  switch (p) {
    case Propagator::exact: return "exact";
    case Propagator::factorized: return "factorized";
    case Propagator::closed_form: return "closed_form";
  }
  return "?";
}

Propagator propagator_from_string(const std::string& s) {
  if (s == "exact") return Propagator::exact;
  if (s == "factorized") return Propagator::factorized;
  if (s == "closed_form") return Propagator::closed_form;
  throw DomainError("unknown propagator '" + s + "'");
}

void SweepConfig::validate() const {
  if (!(t_end > t_start)) throw DomainError("sweep requires t_end > t_start");
  if (n_steps < 2) throw DomainError("sweep requires at least 2 steps");
  if (!(params.kappa >= 0.0 && params.kappa <= 1.0)) throw DomainError("kappa out of [0,1]");
  if (propagator == Propagator::closed_form) {
    for (PartitionId part : partitions) {
      if (part != PartitionId::AB && part != PartitionId::AC && part != PartitionId::BC) {
        throw InvalidPartitionError(
            "closed_form propagator only provides AB, AC and BC marginals");
      }
    }
    const bool convention = near(params.alpha, kPi / 3.0) && near(params.gamma, kPi / 2.0) &&
                            near(params.omega, 2.0);
    if (!convention && !allow_closed_form_any_params) {
      throw DomainError(
          "closed_form elements are derived at alpha=pi/3, gamma=pi/2, omega=2; "
          "pass the override flag to evaluate them at other parameters");
    }
  }
}

SweepTable time_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepTable table;
  table.config = cfg;
  table.axis = SweepAxis::time;
  table.rows.reserve(static_cast<std::size_t>(cfg.n_steps));

  std::optional<DensityMatrix> rho0;
  if (cfg.propagator != Propagator::closed_form) rho0 = initial_state(cfg.params);
  const double dt = (cfg.t_end - cfg.t_start) / (cfg.n_steps - 1);
  for (int i = 0; i < cfg.n_steps; ++i) {
    const double t = cfg.t_start + dt * i;
    try {
      table.rows.push_back(
          evaluate_grid_point(cfg, cfg.params, t, t, rho0 ? &*rho0 : nullptr));
    } catch (const Error& e) {
      std::ostringstream os;
      os << e.what() << " (at t=" << t << ")";
      throw Error(os.str());
    }
  }
  return table;
}

SweepTable kappa_sweep(const SweepConfig& cfg_template, const std::vector<double>& kappa_grid,
                       double t) {
  if (kappa_grid.empty()) throw DomainError("kappa grid must be nonempty");
  for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
    if (kappa_grid[i] < 0.0 || kappa_grid[i] > 1.0) throw DomainError("kappa grid out of [0,1]");
    if (i > 0 && kappa_grid[i] <= kappa_grid[i - 1]) {
      throw DomainError("kappa grid must be strictly increasing");
    }
  }
  SweepConfig cfg = cfg_template;
  cfg.params.kappa = kappa_grid.front();
  cfg.validate();

  SweepTable table;
  table.config = cfg;
  table.axis = SweepAxis::kappa;
  table.kappa_sweep_time = t;
  table.rows.reserve(kappa_grid.size());
  for (double kappa : kappa_grid) {
    SystemParams params = cfg.params;
    params.kappa = kappa;
    try {
      std::optional<DensityMatrix> rho0;
      if (cfg.propagator != Propagator::closed_form) rho0 = initial_state(params);
      table.rows.push_back(evaluate_grid_point(cfg, params, t, kappa, rho0 ? &*rho0 : nullptr));
    } catch (const Error& e) {
      std::ostringstream os;
      os << e.what() << " (at kappa=" << kappa << ")";
      throw Error(os.str());
    }
  }
  return table;
}

SeriesFeatures analyze_series(const std::vector<double>& xs, const std::vector<double>& ys,
                              double zero_threshold) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("analyze_series requires two equally sized series of length >= 2");
  }
  SeriesFeatures out;
  auto interp = [&](std::size_t i) {
    // x where the series crosses the threshold between points i-1 and i
    const double y0 = ys[i - 1], y1 = ys[i];
    return xs[i - 1] + (xs[i] - xs[i - 1]) * (zero_threshold - y0) / (y1 - y0);
  };
  for (std::size_t i = 1; i < ys.size(); ++i) {
    const bool was_zero = ys[i - 1] <= zero_threshold;
    const bool is_zero = ys[i] <= zero_threshold;
    if (was_zero && !is_zero) out.onsets.push_back(interp(i));
    if (!was_zero && is_zero) out.deaths.push_back(interp(i));
  }
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    if (ys[i] > zero_threshold && ys[i] >= ys[i - 1] && ys[i] >= ys[i + 1]) {
      out.has_local_max = true;
      out.first_local_max_x = xs[i];
      out.first_local_max_value = ys[i];
      break;
    }
  }
  return out;
}

std::vector<double> series_column(const SweepTable& table, PartitionId part,
                                  const std::string& column) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const SweepRow& row : table.rows) {
    const PartitionMeasures* found = nullptr;
    for (const PartitionMeasures& pm : row.entries) {
      if (pm.partition == part) {
        found = &pm;
        break;
      }
    }
    if (!found) throw InvalidPartitionError(std::string("partition ") + partition_name(part) +
                                            " not present in sweep table");
    const MeasureSet& m = found->measures;
    if (column == "C") out.push_back(m.concurrence);
    else if (column == "N") out.push_back(m.negativity);
    else if (column == "EF") out.push_back(m.eof);
    else if (column == "purity") out.push_back(m.purity);
    else if (column == "Inon") out.push_back(m.info_nonlocal);
    else throw DomainError("unknown series column '" + column + "'");
  }
  return out;
}

std::vector<double> series_axis(const SweepTable& table) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const SweepRow& row : table.rows) out.push_back(row.x);
  return out;
}

}  // namespace tridm
