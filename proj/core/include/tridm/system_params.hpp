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

namespace tridm {

/// The five physical knobs of the model.
///
///   alpha  initial A-B state angle, |phi_ab> = cos(alpha)|eg> + sin(alpha)|ge>
///   gamma  control-qubit angle,     |phi_c>  = cos(gamma)|e> + sin(gamma)|g>
///   kappa  weight of the pure component in the Werner-like A-B mixture, in [0,1]
///   omega  XX dipole coupling strength between A and B
///   dz     z-polarized Dzyaloshinskii-Moriya strength between A and C
///
/// Basis convention throughout: |e> = |0> = (1,0)^T, |g> = |1> = (0,1)^T,
/// tensor order A (x) B (x) C with A most significant.
struct SystemParams {
  double alpha = 1.0471975511965976;  // pi/3
  double gamma = 1.5707963267948966;  // pi/2
  double kappa = 0.9;
  double omega = 2.0;
  double dz = 0.5;

  SystemParams() = default;
  SystemParams(double alpha_, double gamma_, double kappa_, double omega_, double dz_);
};

}  // namespace tridm
