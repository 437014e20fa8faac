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

// tridm: simulate the three-qubit XX + Dzyaloshinskii-Moriya model and emit
// quantifier sweeps as CSV (optionally with SVG line charts).
//
// Exit codes: 0 success, 2 usage error, 3 I/O failure, 4 numerical failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tridm/closed_form.hpp"
#include "tridm/errors.hpp"
#include "tridm/model.hpp"
#include "tridm/presets.hpp"
#include "tridm/report_io.hpp"
#include "tridm/sweep.hpp"
#include "tridm/validation.hpp"
#include "tridm/version.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct CommonOptions {
  double alpha = kPi / 3.0;
  double gamma = kPi / 2.0;
  double kappa = 0.9;
  double omega = 2.0;
  double dz = 0.5;
  std::string propagator = "exact";
  std::string info_mode = "total";
  std::string partitions = "AB";
  bool closed_form_override = false;
};

const CLI::Validator KappaInUnitInterval(
    [](std::string& s) -> std::string {
      try {
        const double v = std::stod(s);
        if (v < 0.0 || v > 1.0) return std::string("kappa out of [0,1]");
      } catch (...) {
        return std::string("kappa must be a number");
      }
      return {};
    },
    "KAPPA01");

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--alpha", opt.alpha, "initial A-B state angle (radians)")
      ->capture_default_str();
  cmd->add_option("--gamma", opt.gamma, "control-qubit angle (radians)")->capture_default_str();
  cmd->add_option("--kappa", opt.kappa, "pure-component weight in [0,1]")
      ->check(KappaInUnitInterval)
      ->capture_default_str();
  cmd->add_option("--omega", opt.omega, "XX dipole coupling strength")->capture_default_str();
  cmd->add_option("--dz", opt.dz, "Dzyaloshinskii-Moriya strength (z)")->capture_default_str();
  cmd->add_option("--propagator", opt.propagator, "exact | factorized | closed_form")
      ->check(CLI::IsMember({"exact", "factorized", "closed_form"}))
      ->capture_default_str();
  cmd->add_option("--info-mode", opt.info_mode, "total | total_minus_local")
      ->check(CLI::IsMember({"total", "total_minus_local"}))
      ->capture_default_str();
  cmd->add_option("--partitions", opt.partitions,
                  "comma-separated subset of AB,AC,BC,A,B,C,ABC")
      ->capture_default_str();
  cmd->add_flag("--override-closed-form-convention", opt.closed_form_override,
                "evaluate closed-form elements away from alpha=pi/3, gamma=pi/2, omega=2");
}

std::vector<tridm::PartitionId> parse_partitions(const std::string& spec) {
  std::vector<tridm::PartitionId> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(tridm::partition_from_string(token));
  }
  if (out.empty()) throw tridm::DomainError("no partitions requested");
  return out;
}

tridm::SweepConfig make_config(const CommonOptions& opt) {
  tridm::SweepConfig cfg;
  cfg.params = tridm::SystemParams(opt.alpha, opt.gamma, opt.kappa, opt.omega, opt.dz);
  cfg.propagator = tridm::propagator_from_string(opt.propagator);
  cfg.info_mode = tridm::info_mode_from_string(opt.info_mode);
  cfg.partitions = parse_partitions(opt.partitions);
  cfg.allow_closed_form_any_params = opt.closed_form_override;
  return cfg;
}

void write_outputs(const tridm::SweepTable& table, const std::string& out_path,
                   const std::string& format) {
  const std::filesystem::path csv_path(out_path);
  tridm::emit_csv(table, csv_path);
  std::cout << "wrote " << csv_path.string() << "\n";
  if (format == "csv+svg") {
    std::filesystem::path stem = csv_path;
    stem.replace_extension();
    for (const auto& f : tridm::emit_svg(table, stem)) {
      std::cout << "wrote " << f.string() << "\n";
    }
  }
}

int run_evolve(const tridm::SweepConfig& cfg_in, double t, const std::string& out_path,
               const std::string& format) {
  tridm::SweepConfig cfg = cfg_in;
  cfg.t_start = 0.0;
  cfg.t_end = (t != 0.0) ? std::abs(t) : 1.0;
  cfg.n_steps = 2;

  // Evaluate the measures at the single requested time point.
  tridm::SweepTable table;
  table.config = cfg;
  table.axis = tridm::SweepAxis::time;
  tridm::SweepRow row;
  row.x = t;
  if (cfg.propagator == tridm::Propagator::closed_form) {
    for (tridm::PartitionId part : cfg.partitions) {
      tridm::ClosedFormMarginal cf = tridm::closed_form_marginal(cfg.params, t, part);
      tridm::PartitionMeasures pm;
      pm.partition = part;
      pm.pair = true;
      pm.measures =
          tridm::measure_all(tridm::DensityMatrix::unchecked(cf.matrix, 2), cfg.info_mode);
      row.entries.push_back(pm);
    }
  } else {
    const tridm::DensityMatrix rho0 = tridm::initial_state(cfg.params);
    const tridm::ComplexMatrix u = (cfg.propagator == tridm::Propagator::exact)
                                       ? tridm::exact_propagator(cfg.params, t)
                                       : tridm::factorized_propagator(cfg.params, t);
    const tridm::DensityMatrix rho_t = tridm::evolve(rho0, u);
    for (tridm::PartitionId part : cfg.partitions) {
      const tridm::DensityMatrix sub =
          (part == tridm::PartitionId::ABC) ? rho_t : tridm::marginal(rho_t, part);
      tridm::PartitionMeasures pm;
      pm.partition = part;
      if (sub.n_qubits() == 2) {
        pm.pair = true;
        pm.measures = tridm::measure_all(sub, cfg.info_mode);
      } else {
        pm.pair = false;
        pm.measures.purity = sub.purity();
        pm.measures.info_total = tridm::bz_total_information(sub);
        pm.measures.info_nonlocal = (sub.n_qubits() == 1)
                                        ? pm.measures.info_total
                                        : tridm::nonlocal_information(sub, cfg.info_mode);
      }
      row.entries.push_back(pm);
    }
  }
  table.rows.push_back(row);

  if (!out_path.empty()) {
    write_outputs(table, out_path, format);
    return 0;
  }
  std::cout << "t = " << tridm::format_value(t)
            << " (propagator=" << propagator_name(cfg.propagator) << ")\n";
  for (const tridm::PartitionMeasures& pm : table.rows[0].entries) {
    std::cout << "  " << tridm::partition_name(pm.partition) << ": ";
    if (pm.pair) {
      std::cout << "C=" << tridm::format_value(pm.measures.concurrence)
                << " N=" << tridm::format_value(pm.measures.negativity)
                << " EF=" << tridm::format_value(pm.measures.eof);
      std::cout << " purity=" << tridm::format_value(pm.measures.purity)
                << " Inon=" << tridm::format_value(pm.measures.info_nonlocal) << "\n";
    } else {
      std::cout << "purity=" << tridm::format_value(pm.measures.purity)
                << " Inon=" << tridm::format_value(pm.measures.info_nonlocal) << "\n";
    }
  }
  return 0;
}

std::vector<double> parse_grid(const std::string& spec, const char* what) {
  // "start:end:n" or a comma-separated list
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double start = 0.0, end = 0.0;
    int n = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &start, &end, &n) != 3 || n < 1) {
      throw tridm::DomainError(std::string("bad grid spec for ") + what + ": '" + spec + "'");
    }
    for (int i = 0; i < n; ++i) {
      out.push_back(n == 1 ? start : start + (end - start) * i / (n - 1));
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(std::stod(token));
  }
  if (out.empty()) throw tridm::DomainError(std::string("empty grid for ") + what);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tri-dm: three-qubit XX + Dzyaloshinskii-Moriya dynamics toolkit"};
  app.set_version_flag("--version", std::string("tri-dm v") + tridm::kVersion);
  app.require_subcommand(1);

  // evolve
  CommonOptions evolve_opt;
  double evolve_t = 1.0;
  std::string evolve_out, evolve_format = "csv";
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "measures at a single time point");
  add_common_options(evolve_cmd, evolve_opt);
  evolve_cmd->add_option("--t", evolve_t, "time point")->capture_default_str();
  evolve_cmd->add_option("--out", evolve_out, "CSV output path (default: print to stdout)");
  evolve_cmd->add_option("--format", evolve_format, "csv | csv+svg")
      ->check(CLI::IsMember({"csv", "csv+svg"}));

  // sweep
  CommonOptions sweep_opt;
  double sweep_t_start = 0.0, sweep_t_end = 5.0;
  int sweep_steps = 501;
  std::string sweep_out = "sweep.csv", sweep_format = "csv";
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "quantifiers over a uniform time grid");
  add_common_options(sweep_cmd, sweep_opt);
  sweep_cmd->add_option("--t-start", sweep_t_start, "grid start")->capture_default_str();
  sweep_cmd->add_option("--t-end", sweep_t_end, "grid end")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep_steps, "grid points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "CSV output path")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "csv | csv+svg")
      ->check(CLI::IsMember({"csv", "csv+svg"}));

  // figure
  std::string figure_name, figure_out, figure_format = "csv";
  std::string figure_propagator, figure_info_mode;
  CLI::App* figure_cmd = app.add_subcommand("figure", "run a named preset");
  figure_cmd->add_option("--name", figure_name, "preset name (see list-presets)")->required();
  figure_cmd->add_option("--out", figure_out, "CSV output path (default: <name>.csv)");
  figure_cmd->add_option("--format", figure_format, "csv | csv+svg")
      ->check(CLI::IsMember({"csv", "csv+svg"}));
  figure_cmd->add_option("--propagator", figure_propagator,
                         "override the preset propagator (exact | factorized)")
      ->check(CLI::IsMember({"exact", "factorized"}));
  figure_cmd->add_option("--info-mode", figure_info_mode, "override the preset info mode")
      ->check(CLI::IsMember({"total", "total_minus_local"}));

  // validate
  std::string validate_out = "validation.csv";
  std::string validate_kappa, validate_dz, validate_t;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "closed-form marginals vs propagator marginals");
  validate_cmd->add_option("--out", validate_out, "report CSV path")->capture_default_str();
  validate_cmd->add_option("--kappa-grid", validate_kappa, "list a,b,c or start:end:n");
  validate_cmd->add_option("--dz-grid", validate_dz, "list a,b,c or start:end:n");
  validate_cmd->add_option("--t-grid", validate_t, "list a,b,c or start:end:n");

  // list-presets
  CLI::App* list_cmd = app.add_subcommand("list-presets", "print the preset catalogue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // Configuration phase: option values become a validated run configuration.
  // Anything thrown here is a usage problem (exit 2), not a numerical one.
  tridm::SweepConfig run_cfg;
  tridm::FigurePreset preset;
  tridm::ValidationGrids grids;
  try {
    if (evolve_cmd->parsed()) {
      run_cfg = make_config(evolve_opt);
      run_cfg.t_start = 0.0;
      run_cfg.t_end = 1.0;
      run_cfg.validate();
    } else if (sweep_cmd->parsed()) {
      run_cfg = make_config(sweep_opt);
      run_cfg.t_start = sweep_t_start;
      run_cfg.t_end = sweep_t_end;
      run_cfg.n_steps = sweep_steps;
      run_cfg.validate();
    } else if (figure_cmd->parsed()) {
      preset = tridm::figure_preset(figure_name);
      if (!figure_propagator.empty()) {
        preset.config.propagator = tridm::propagator_from_string(figure_propagator);
      }
      if (!figure_info_mode.empty()) {
        preset.config.info_mode = tridm::info_mode_from_string(figure_info_mode);
      }
      preset.config.validate();
    } else if (validate_cmd->parsed()) {
      grids = tridm::default_validation_grids();
      if (!validate_kappa.empty()) grids.kappa = parse_grid(validate_kappa, "kappa");
      if (!validate_dz.empty()) grids.dz = parse_grid(validate_dz, "dz");
      if (!validate_t.empty()) grids.t = parse_grid(validate_t, "t");
    }
  } catch (const tridm::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // Computation phase: library errors are numerical failures, I/O aside.
  try {
    if (evolve_cmd->parsed()) {
      return run_evolve(run_cfg, evolve_t, evolve_out, evolve_format);
    }
    if (sweep_cmd->parsed()) {
      write_outputs(tridm::time_sweep(run_cfg), sweep_out, sweep_format);
      return 0;
    }
    if (figure_cmd->parsed()) {
      const std::string out = figure_out.empty() ? figure_name + ".csv" : figure_out;
      write_outputs(tridm::run_figure_preset(preset), out, figure_format);
      return 0;
    }
    if (validate_cmd->parsed()) {
      const tridm::ValidationReport report = tridm::validate_closed_forms(grids);
      tridm::emit_validation_csv(report, validate_out);
      std::cout << tridm::validation_summary(report);
      std::cout << "wrote " << validate_out << "\n";
      return 0;
    }
    if (list_cmd->parsed()) {
      for (const std::string& name : tridm::figure_preset_names()) {
        const tridm::FigurePreset p = tridm::figure_preset(name);
        std::cout << name << ": " << p.description;
        if (!p.inferred_notes.empty()) {
          std::cout << " [inferred:";
          for (const std::string& n : p.inferred_notes) std::cout << " " << n << ";";
          std::cout << "]";
        }
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const tridm::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const tridm::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
