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

#include "tridm/sweep.hpp"

namespace tridm {

/// A named, ready-to-run parameter bundle. Time presets sweep t over the
/// default grid; kappa presets sweep kappa at a fixed t. Parameters that had
/// to be inferred rather than stated are listed in `inferred_notes`.
struct FigurePreset {
  std::string name;
  std::string description;
  SweepAxis axis = SweepAxis::time;
  SweepConfig config;
  double kappa_sweep_time = 0.0;           // used when axis == kappa
  std::vector<double> kappa_grid;          // used when axis == kappa
  std::vector<std::string> inferred_notes;
};

/// Look up a preset by name (fig1, fig2a ... fig11b). Throws UnknownPresetError.
FigurePreset figure_preset(const std::string& name);

/// All preset names in catalogue order.
std::vector<std::string> figure_preset_names();

/// Run a preset to a table (dispatches on the axis).
SweepTable run_figure_preset(const FigurePreset& preset);

}  // namespace tridm
