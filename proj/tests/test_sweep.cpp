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

#include <doctest.h>

#include <cmath>
#include <string>

#include "support/test_helpers.hpp"
#include "tridm/errors.hpp"
#include "tridm/measures.hpp"
#include "tridm/model.hpp"
#include "tridm/presets.hpp"
#include "tridm/sweep.hpp"
#include "tridm/validation.hpp"

using namespace tridm;
using tridm_test::kPi;

TEST_CASE("frozen dynamics: omega = dz = 0 repeats the t=0 row") {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.6, 0.0, 0.0);
  cfg.n_steps = 11;
  cfg.t_end = 5.0;
  cfg.partitions = {PartitionId::AB, PartitionId::AC};
  const SweepTable table = time_sweep(cfg);
  REQUIRE(table.rows.size() == 11);
  const MeasureSet& first = table.rows[0].entries[0].measures;
  for (const SweepRow& row : table.rows) {
    for (std::size_t e = 0; e < row.entries.size(); ++e) {
      const MeasureSet& m = row.entries[e].measures;
      const MeasureSet& ref = table.rows[0].entries[e].measures;
      CHECK(m.concurrence == doctest::Approx(ref.concurrence).epsilon(1e-12).scale(1.0));
      CHECK(m.purity == doctest::Approx(ref.purity).epsilon(1e-12).scale(1.0));
      CHECK(m.info_nonlocal == doctest::Approx(ref.info_nonlocal).epsilon(1e-12).scale(1.0));
    }
  }
  // Werner purity kappa^2 + kappa(1-kappa)/2 + (1-kappa)^2/4 at kappa=0.6
  CHECK(first.purity == doctest::Approx(0.52).epsilon(1e-12));
}

TEST_CASE("fig2a sudden birth/death golden values") {
  // Frozen from an independent dense-grid evaluation of the same model.
  const SweepTable table = run_figure_preset(figure_preset("fig2a"));
  REQUIRE(table.rows.size() == 501);
  const SeriesFeatures f =
      analyze_series(series_axis(table), series_column(table, PartitionId::AB, "C"));

  REQUIRE(!f.onsets.empty());
  REQUIRE(!f.deaths.empty());
  CHECK(f.onsets[0] == doctest::Approx(0.9300023156255054).epsilon(1e-9).scale(1.0));
  CHECK(f.has_local_max);
  CHECK(f.first_local_max_x == doctest::Approx(1.26).epsilon(1e-12));
  CHECK(f.first_local_max_value ==
        doctest::Approx(0.35082455081900316).epsilon(1e-9).scale(1.0));
  CHECK(f.deaths[0] == doctest::Approx(2.209998532548079).epsilon(1e-9).scale(1.0));

  // Bisection against the model directly gives the grid-independent crossing.
  const SystemParams p(kPi / 3, kPi / 2, 0.3, 2.0, 0.5);
  const DensityMatrix rho0 = initial_state(p);
  auto c_of_t = [&](double t) {
    return concurrence(marginal(evolve(rho0, factorized_propagator(p, t)), PartitionId::AB));
  };
  double lo = 0.93, hi = 0.94;
  for (int i = 0; i < 50; ++i) {
    const double mid = 0.5 * (lo + hi);
    (c_of_t(mid) > kZeroThreshold ? hi : lo) = mid;
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(0.9372334443240726).epsilon(1e-9).scale(1.0));
}

TEST_CASE("exact and factorized sweeps agree row-by-row when dz = 0") {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.8, 1.3, 0.0);
  cfg.n_steps = 21;
  cfg.partitions = {PartitionId::AB, PartitionId::BC};
  cfg.propagator = Propagator::exact;
  const SweepTable exact = time_sweep(cfg);
  cfg.propagator = Propagator::factorized;
  const SweepTable fact = time_sweep(cfg);
  for (std::size_t i = 0; i < exact.rows.size(); ++i) {
    for (std::size_t e = 0; e < exact.rows[i].entries.size(); ++e) {
      const MeasureSet& a = exact.rows[i].entries[e].measures;
      const MeasureSet& b = fact.rows[i].entries[e].measures;
      CHECK(std::abs(a.concurrence - b.concurrence) < 1e-9);
      CHECK(std::abs(a.negativity - b.negativity) < 1e-9);
      CHECK(std::abs(a.eof - b.eof) < 1e-9);
      CHECK(std::abs(a.purity - b.purity) < 1e-9);
      CHECK(std::abs(a.info_nonlocal - b.info_nonlocal) < 1e-9);
    }
  }
}

TEST_CASE("kappa_sweep brackets the Werner threshold and hits the anchors") {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3, kPi / 2, 0.0, 2.0, 0.5);
  cfg.partitions = {PartitionId::AB};
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  const SweepTable table = kappa_sweep(cfg, grid, 0.0);
  REQUIRE(table.rows.size() == 101);
  CHECK(table.axis == SweepAxis::kappa);

  // concurrence is zero then positive; the sign change brackets 1/(1+sqrt(3))
  const std::vector<double> c = series_column(table, PartitionId::AB, "C");
  const double threshold = 1.0 / (1.0 + std::sqrt(3.0));
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i - 1] == 0.0 && c[i] > 0.0) {
      CHECK(grid[i - 1] <= threshold);
      CHECK(grid[i] >= threshold);
    }
  }
  // kappa = 0: everything vanishes
  CHECK(c[0] == 0.0);
  CHECK(series_column(table, PartitionId::AB, "N")[0] == 0.0);
  CHECK(series_column(table, PartitionId::AB, "EF")[0] == 0.0);

  // kappa = 1 at alpha = pi/4 is the maximally entangled anchor
  SweepConfig bell_cfg = cfg;
  bell_cfg.params = SystemParams(kPi / 4, kPi / 2, 0.0, 2.0, 0.5);
  const SweepTable bell = kappa_sweep(bell_cfg, {0.0, 1.0}, 0.0);
  const MeasureSet& last = bell.rows[1].entries[0].measures;
  CHECK(last.concurrence == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(last.negativity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(last.eof == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("kappa_sweep rejects bad grids") {
  SweepConfig cfg;
  cfg.partitions = {PartitionId::AB};
  CHECK_THROWS_AS(kappa_sweep(cfg, {}, 0.0), DomainError);
  CHECK_THROWS_AS(kappa_sweep(cfg, {0.5, 0.4}, 0.0), DomainError);
  CHECK_THROWS_AS(kappa_sweep(cfg, {0.5, 1.2}, 0.0), DomainError);
}

TEST_CASE("preset catalogue") {
  const std::vector<std::string> names = figure_preset_names();
  REQUIRE(names.size() == 20);
  const char* expected[] = {"fig1",  "fig2a", "fig2b", "fig3",  "fig4a", "fig4b", "fig5a",
                            "fig5b", "fig6a", "fig6b", "fig7a", "fig7b", "fig8a", "fig8b",
                            "fig9a", "fig9b", "fig10a", "fig10b", "fig11a", "fig11b"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(names[i] == expected[i]);

  const FigurePreset fig5a = figure_preset("fig5a");
  CHECK(fig5a.config.params.kappa == 0.9);
  CHECK(fig5a.config.params.omega == 0.5);
  CHECK(fig5a.config.params.dz == 0.5);
  CHECK(fig5a.config.params.alpha == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(fig5a.config.params.gamma == doctest::Approx(kPi / 2).epsilon(1e-15));
  REQUIRE(fig5a.config.partitions.size() == 1);
  CHECK(fig5a.config.partitions[0] == PartitionId::AC);
  CHECK(fig5a.config.propagator == Propagator::factorized);

  const FigurePreset fig10b = figure_preset("fig10b");
  CHECK(fig10b.config.params.dz == 0.9);
  CHECK(fig10b.config.params.omega == 0.5);
  CHECK(fig10b.config.params.kappa == 0.9);
  REQUIRE(fig10b.config.partitions.size() == 3);

  const FigurePreset fig1 = figure_preset("fig1");
  CHECK(fig1.axis == SweepAxis::kappa);
  CHECK(fig1.kappa_sweep_time == 0.0);
  CHECK(fig1.kappa_grid.size() == 101);

  const FigurePreset fig9b = figure_preset("fig9b");
  CHECK(fig9b.config.partitions[0] == PartitionId::ABC);
  CHECK(!fig9b.inferred_notes.empty());

  CHECK_THROWS_AS(figure_preset("fig99"), UnknownPresetError);
}

TEST_CASE("first sweep row matches direct evaluation of the initial marginals") {
  const SweepTable table = run_figure_preset(figure_preset("fig2b"));
  const SystemParams p(kPi / 3, kPi / 2, 0.9, 2.0, 0.5);
  const MeasureSet direct = measure_all(initial_pair_state(p));
  const MeasureSet& row0 = table.rows[0].entries[0].measures;
  CHECK(std::abs(row0.concurrence - direct.concurrence) < 1e-10);
  CHECK(std::abs(row0.negativity - direct.negativity) < 1e-10);
  CHECK(std::abs(row0.eof - direct.eof) < 1e-10);
  CHECK(std::abs(row0.purity - direct.purity) < 1e-10);
  CHECK(std::abs(row0.info_nonlocal - direct.info_nonlocal) < 1e-10);
}

TEST_CASE("grid refinement leaves shared rows unchanged") {
  SweepConfig coarse;
  coarse.params = SystemParams(kPi / 3, kPi / 2, 0.9, 2.0, 0.5);
  coarse.t_start = 0.0;
  coarse.t_end = 1.0;
  coarse.n_steps = 11;
  coarse.propagator = Propagator::factorized;
  coarse.partitions = {PartitionId::AB};
  SweepConfig fine = coarse;
  fine.n_steps = 21;
  const SweepTable tc = time_sweep(coarse);
  const SweepTable tf = time_sweep(fine);
  for (std::size_t i = 0; i < tc.rows.size(); ++i) {
    const MeasureSet& a = tc.rows[i].entries[0].measures;
    const MeasureSet& b = tf.rows[2 * i].entries[0].measures;
    CHECK(std::abs(tc.rows[i].x - tf.rows[2 * i].x) < 1e-12);
    CHECK(std::abs(a.concurrence - b.concurrence) < 1e-12);
    CHECK(std::abs(a.purity - b.purity) < 1e-12);
    CHECK(std::abs(a.info_nonlocal - b.info_nonlocal) < 1e-12);
  }
}

TEST_CASE("sweep configuration validation") {
  SweepConfig cfg;
  cfg.t_end = cfg.t_start;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SweepConfig{};
  cfg.n_steps = 1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);

  // closed_form requires the derivation convention unless overridden
  cfg = SweepConfig{};
  cfg.propagator = Propagator::closed_form;
  cfg.params = SystemParams(0.5, 0.5, 0.5, 1.0, 0.5);
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.allow_closed_form_any_params = true;
  CHECK_NOTHROW(cfg.validate());
  cfg.params = closed_form_convention(0.5, 0.5);
  cfg.allow_closed_form_any_params = false;
  CHECK_NOTHROW(cfg.validate());
  cfg.partitions = {PartitionId::A};
  CHECK_THROWS_AS(cfg.validate(), InvalidPartitionError);
}

TEST_CASE("closed_form sweep works for AB and reports the offending t for AC") {
  // The printed AB elements stay inside the quantifier domain at kappa=0.3
  // for small t; elsewhere their trace/positivity defects push the raw
  // quantifiers outside [0,1] and the sweep propagates that as an error.
  SweepConfig cfg;
  cfg.params = closed_form_convention(0.3, 0.5);
  cfg.propagator = Propagator::closed_form;
  cfg.partitions = {PartitionId::AB};
  cfg.t_start = 0.0;
  cfg.t_end = 0.5;
  cfg.n_steps = 5;
  const SweepTable table = time_sweep(cfg);
  CHECK(table.rows.size() == 5);
  for (const SweepRow& row : table.rows) CHECK(std::isfinite(row.entries[0].measures.concurrence));

  // the printed AC elements are non-Hermitian away from t=0, so the measure
  // layer rejects them; the error must carry the grid point
  cfg.partitions = {PartitionId::AC};
  cfg.t_start = 0.3;
  cfg.t_end = 0.8;
  cfg.n_steps = 3;
  try {
    time_sweep(cfg);
    FAIL("expected a measure error for the non-Hermitian AC closed form");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("at t=") != std::string::npos);
  }
}

TEST_CASE("analyze_series on a synthetic hat function") {
  const std::vector<double> xs = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> ys = {0.0, 0.0, 0.5, 1.0, 0.5, 0.0};
  const SeriesFeatures f = analyze_series(xs, ys, 1e-6);
  REQUIRE(f.onsets.size() == 1);
  REQUIRE(f.deaths.size() == 1);
  CHECK(f.onsets[0] == doctest::Approx(1.0 + 1e-6 / 0.5).epsilon(1e-9));
  CHECK(f.deaths[0] == doctest::Approx(5.0 - 1e-6 / 0.5).epsilon(1e-9));
  CHECK(f.has_local_max);
  CHECK(f.first_local_max_x == 3.0);
  CHECK(f.first_local_max_value == 1.0);
}

TEST_CASE("validate_closed_forms cardinality, finiteness, commuting limit") {
  ValidationGrids grids;
  grids.kappa = {0.0, 1.0};
  grids.dz = {0.0, 0.5};
  grids.t = {0.0, 0.5, 1.0};
  const ValidationReport report = validate_closed_forms(grids);
  CHECK(report.records.size() == 2 * 2 * 3 * 3);
  for (const ValidationRecord& r : report.records) {
    CHECK(std::isfinite(r.report.trace_deviation));
    CHECK(std::isfinite(r.report.hermiticity_deviation));
    CHECK(std::isfinite(r.report.min_eigenvalue));
    CHECK(std::isfinite(r.report.distance_exact));
    CHECK(std::isfinite(r.report.distance_factorized));
    CHECK(std::isfinite(r.propagator_gap));
    if (r.dz == 0.0) CHECK(r.propagator_gap <= 1e-9);
  }
  CHECK(report.max_commuting_propagator_gap <= 1e-9);
  REQUIRE(report.summaries.size() == 3);
  CHECK_THROWS_AS(validate_closed_forms(ValidationGrids{}), DomainError);
}
