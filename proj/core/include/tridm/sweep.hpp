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

#include "tridm/density_matrix.hpp"
#include "tridm/measures.hpp"
#include "tridm/system_params.hpp"

namespace tridm {

enum class Propagator { exact, factorized, closed_form };

const char* propagator_name(Propagator p);
Propagator propagator_from_string(const std::string& s);  // throws DomainError

struct SweepConfig {
  SystemParams params;
  double t_start = 0.0;
  double t_end = 5.0;
  int n_steps = 501;
  Propagator propagator = Propagator::exact;
  std::vector<PartitionId> partitions = {PartitionId::AB};
  InfoMode info_mode = InfoMode::total;
  /// The closed-form elements are only meaningful at alpha = pi/3,
  /// gamma = pi/2, omega = 2; set this to evaluate them elsewhere anyway.
  bool allow_closed_form_any_params = false;

  void validate() const;  // throws DomainError on a bad configuration
};

/// Measures of one partition at one grid point. Entanglement quantifiers
/// are only defined for two-qubit partitions; `pair` flags whether the
/// concurrence/negativity/eof fields carry data.
struct PartitionMeasures {
  PartitionId partition = PartitionId::AB;
  bool pair = true;
  MeasureSet measures;
};

struct SweepRow {
  double x = 0.0;  // time for time sweeps, kappa for kappa sweeps
  std::vector<PartitionMeasures> entries;
};

enum class SweepAxis { time, kappa };

struct SweepTable {
  SweepConfig config;
  SweepAxis axis = SweepAxis::time;
  double kappa_sweep_time = 0.0;  // the fixed t of a kappa sweep
  std::vector<SweepRow> rows;
};

/// Uniform time grid over [t_start, t_end]; per grid point: build the
/// configured propagator, evolve the initial state, reduce to each requested
/// partition and measure. Errors from the model or measure layers are
/// rethrown with the offending grid point attached.
SweepTable time_sweep(const SweepConfig& cfg);

/// Same machinery with kappa varying and t fixed; the grid must be
/// increasing and inside [0,1].
SweepTable kappa_sweep(const SweepConfig& cfg_template, const std::vector<double>& kappa_grid,
                       double t);

/// Below this value a quantifier counts as zero for onset/death detection.
inline constexpr double kZeroThreshold = 1e-6;

/// Sudden birth/death structure of one sampled series. Crossing times are
/// linearly interpolated between bracketing grid points; the first local
/// maximum is reported at grid resolution.
struct SeriesFeatures {
  std::vector<double> onsets;
  std::vector<double> deaths;
  bool has_local_max = false;
  double first_local_max_x = 0.0;
  double first_local_max_value = 0.0;
};

SeriesFeatures analyze_series(const std::vector<double>& xs, const std::vector<double>& ys,
                              double zero_threshold = kZeroThreshold);

/// Extract one quantifier column from a table. `column` is one of
/// C, N, EF, purity, Inon; the partition must be present in every row.
std::vector<double> series_column(const SweepTable& table, PartitionId part,
                                  const std::string& column);
std::vector<double> series_axis(const SweepTable& table);

}  // namespace tridm
