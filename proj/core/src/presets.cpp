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

#include "tridm/presets.hpp"

#include "tridm/errors.hpp"

namespace tridm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  return g;
}

SweepConfig base_config(double kappa, double omega, double dz,
                        std::vector<PartitionId> partitions) {
  SweepConfig cfg;
  cfg.params = SystemParams(kPi / 3.0, kPi / 2.0, kappa, omega, dz);
  cfg.t_start = 0.0;
  cfg.t_end = 5.0;
  cfg.n_steps = 501;
  cfg.propagator = Propagator::factorized;
  cfg.partitions = std::move(partitions);
  cfg.info_mode = InfoMode::total;
  return cfg;
}

FigurePreset time_preset(const std::string& name, const std::string& description, double kappa,
                         double omega, double dz, std::vector<PartitionId> partitions,
                         std::vector<std::string> inferred = {}) {
  FigurePreset p;
  p.name = name;
  p.description = description;
  p.axis = SweepAxis::time;
  p.config = base_config(kappa, omega, dz, std::move(partitions));
  p.inferred_notes = std::move(inferred);
  return p;
}

FigurePreset kappa_preset(const std::string& name, const std::string& description, double omega,
                          double dz, double t, std::vector<PartitionId> partitions,
                          std::vector<std::string> inferred = {}) {
  FigurePreset p;
  p.name = name;
  p.description = description;
  p.axis = SweepAxis::kappa;
  p.config = base_config(0.0, omega, dz, std::move(partitions));
  p.kappa_sweep_time = t;
  p.kappa_grid = uniform_grid(0.0, 1.0, 101);
  p.inferred_notes = std::move(inferred);
  return p;
}

const char* kOmegaInferred =
    "omega=2 inferred: not stated for this preset; matches the closed-form element "
    "arguments and the fig9 caption";
const char* kDzInherited = "dz=0.5 inherited from the fig2 chain";

std::vector<FigurePreset> build_catalogue() {
  std::vector<FigurePreset> v;
  v.push_back(kappa_preset("fig1", "initial A-B quantifiers vs kappa at t=0", 2.0, 0.5, 0.0,
                           {PartitionId::AB},
                           {"t=0 makes omega and dz irrelevant; catalogue defaults kept"}));
  v.push_back(time_preset("fig2a", "A-B quantifiers vs t, kappa=0.3, dz=0.5", 0.3, 2.0, 0.5,
                          {PartitionId::AB}, {kOmegaInferred}));
  v.push_back(time_preset("fig2b", "A-B quantifiers vs t, kappa=0.9, dz=0.5", 0.9, 2.0, 0.5,
                          {PartitionId::AB}, {kOmegaInferred}));
  v.push_back(time_preset("fig3", "A-B quantifiers vs t, kappa=0.9, dz=0.9", 0.9, 2.0, 0.9,
                          {PartitionId::AB}, {kOmegaInferred}));
  v.push_back(time_preset("fig4a", "A-B quantifiers vs t, omega=1", 0.9, 1.0, 0.5,
                          {PartitionId::AB}, {kDzInherited}));
  v.push_back(time_preset("fig4b", "A-B quantifiers vs t, omega=0.5", 0.9, 0.5, 0.5,
                          {PartitionId::AB}, {kDzInherited}));
  v.push_back(time_preset("fig5a", "A-C quantifiers vs t, dz=0.5", 0.9, 0.5, 0.5,
                          {PartitionId::AC}));
  v.push_back(time_preset("fig5b", "A-C quantifiers vs t, dz=0.9", 0.9, 0.5, 0.9,
                          {PartitionId::AC}));
  v.push_back(time_preset("fig6a", "A-C quantifiers vs t, omega=1", 0.9, 1.0, 0.5,
                          {PartitionId::AC}, {kDzInherited}));
  v.push_back(time_preset("fig6b", "A-C quantifiers vs t, omega=2", 0.9, 2.0, 0.5,
                          {PartitionId::AC}, {kDzInherited}));
  v.push_back(time_preset("fig7a", "B-C quantifiers vs t, dz=0.5", 0.9, 0.5, 0.5,
                          {PartitionId::BC}));
  v.push_back(time_preset("fig7b", "B-C quantifiers vs t, dz=0.9", 0.9, 0.5, 0.9,
                          {PartitionId::BC}));
  v.push_back(time_preset("fig8a", "B-C quantifiers vs t, omega=1", 0.9, 1.0, 0.5,
                          {PartitionId::BC}, {kDzInherited}));
  v.push_back(time_preset("fig8b", "B-C quantifiers vs t, omega=2", 0.9, 2.0, 0.5,
                          {PartitionId::BC}, {kDzInherited}));
  v.push_back(kappa_preset("fig9a", "non-local information of the initial A-B pair vs kappa",
                           2.0, 0.5, 0.0, {PartitionId::AB}));
  v.push_back(kappa_preset(
      "fig9b", "non-local information of the whole three-qubit state vs kappa", 2.0, 0.5, 1.0,
      {PartitionId::ABC},
      {"evaluation time not stated; t=1.0 used - under the default info mode the value is "
       "time-independent (purity is conserved)"}));
  v.push_back(time_preset("fig10a", "non-local information of all pairs vs t, kappa=0.3",
                          0.3, 0.5, 0.9, {PartitionId::AB, PartitionId::AC, PartitionId::BC}));
  v.push_back(time_preset("fig10b", "non-local information of all pairs vs t, kappa=0.9",
                          0.9, 0.5, 0.9, {PartitionId::AB, PartitionId::AC, PartitionId::BC}));
  v.push_back(time_preset("fig11a", "same as fig10a with dz=0.5", 0.3, 0.5, 0.5,
                          {PartitionId::AB, PartitionId::AC, PartitionId::BC}));
  v.push_back(time_preset("fig11b", "same as fig10b with omega=2", 0.9, 2.0, 0.9,
                          {PartitionId::AB, PartitionId::AC, PartitionId::BC}));
  return v;
}

const std::vector<FigurePreset>& catalogue() {
  static const std::vector<FigurePreset> v = build_catalogue();
  return v;
}

}  // namespace

FigurePreset figure_preset(const std::string& name) {
  for (const FigurePreset& p : catalogue()) {
    if (p.name == name) return p;
  }
  throw UnknownPresetError("unknown figure preset '" + name + "'");
}

std::vector<std::string> figure_preset_names() {
  std::vector<std::string> names;
  names.reserve(catalogue().size());
  for (const FigurePreset& p : catalogue()) names.push_back(p.name);
  return names;
}

SweepTable run_figure_preset(const FigurePreset& preset) {
  if (preset.axis == SweepAxis::time) return time_sweep(preset.config);
  return kappa_sweep(preset.config, preset.kappa_grid, preset.kappa_sweep_time);
}

}  // namespace tridm
