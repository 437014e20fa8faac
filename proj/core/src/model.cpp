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

#include "tridm/model.hpp"

#include <cmath>
#include <sstream>

#include "tridm/eig.hpp"
#include "tridm/errors.hpp"

namespace tridm {

namespace {

void check_params(const SystemParams& p) {
  if (!(p.kappa >= 0.0 && p.kappa <= 1.0)) {
    std::ostringstream os;
    os << "kappa out of [0,1]: " << p.kappa;
    throw DomainError(os.str());
  }
  for (double v : {p.alpha, p.gamma, p.omega, p.dz}) {
    if (!std::isfinite(v)) throw DomainError("SystemParams fields must be finite");
  }
}

ComplexMatrix two_site_op(PauliAxis first, int pos_first, PauliAxis second, int pos_second) {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int q = 0; q < 3; ++q) {
    if (q == pos_first) {
      out = kron(out, pauli(first));
    } else if (q == pos_second) {
      out = kron(out, pauli(second));
    } else {
      out = kron(out, eye);
    }
  }
  return out;
}

}  // namespace

SystemParams::SystemParams(double alpha_, double gamma_, double kappa_, double omega_, double dz_)
    : alpha(alpha_), gamma(gamma_), kappa(kappa_), omega(omega_), dz(dz_) {
  check_params(*this);
}

ComplexMatrix build_hamiltonian(const SystemParams& p) {
  check_params(p);
  const ComplexMatrix xx = two_site_op(PauliAxis::x, 0, PauliAxis::x, 1);
  const ComplexMatrix yy = two_site_op(PauliAxis::y, 0, PauliAxis::y, 1);
  const ComplexMatrix xy = two_site_op(PauliAxis::x, 0, PauliAxis::y, 2);
  const ComplexMatrix yx = two_site_op(PauliAxis::y, 0, PauliAxis::x, 2);
  return Complex(0.5 * p.omega, 0.0) * (xx + yy) + Complex(p.dz, 0.0) * (xy - yx);
}

DensityMatrix initial_pair_state(const SystemParams& p) {
  check_params(p);
  // |phi_ab> = cos(alpha)|eg> + sin(alpha)|ge>, basis indices 1 and 2.
  const double ca = std::cos(p.alpha);
  const double sa = std::sin(p.alpha);
  ComplexMatrix rho(4);
  rho(1, 1) = p.kappa * ca * ca;
  rho(1, 2) = p.kappa * ca * sa;
  rho(2, 1) = p.kappa * sa * ca;
  rho(2, 2) = p.kappa * sa * sa;
  const double noise = 0.25 * (1.0 - p.kappa);
  for (int i = 0; i < 4; ++i) rho(i, i) += noise;
  return DensityMatrix::checked(std::move(rho), 2);
}

DensityMatrix initial_state(const SystemParams& p) {
  const DensityMatrix pair = initial_pair_state(p);
  const double cg = std::cos(p.gamma);
  const double sg = std::sin(p.gamma);
  ComplexMatrix rho_c(2);
  rho_c(0, 0) = cg * cg;
  rho_c(0, 1) = cg * sg;
  rho_c(1, 0) = sg * cg;
  rho_c(1, 1) = sg * sg;
  return DensityMatrix::checked(kron(pair.matrix(), rho_c), 3);
}

ComplexMatrix exact_propagator(const SystemParams& p, double t) {
  if (!std::isfinite(t)) throw DomainError("propagator time must be finite");
  return expm_hermitian_times_minus_i_t(build_hamiltonian(p), t);
}

ComplexMatrix factorized_propagator(const SystemParams& p, double t) {
  check_params(p);
  if (!std::isfinite(t)) throw DomainError("propagator time must be finite");

  const ComplexMatrix eye = ComplexMatrix::identity(8);
  // Each generator squares to the identity, so
  // exp(-i theta G) = cos(theta) I - i sin(theta) G.
  auto factor = [&eye](double theta, const ComplexMatrix& g) {
    return std::cos(theta) * eye + Complex(0.0, -std::sin(theta)) * g;
  };
  const ComplexMatrix a1 = factor(0.5 * p.omega * t, two_site_op(PauliAxis::x, 0, PauliAxis::x, 1));
  const ComplexMatrix b1 = factor(0.5 * p.omega * t, two_site_op(PauliAxis::y, 0, PauliAxis::y, 1));
  const ComplexMatrix a2 = factor(p.dz * t, two_site_op(PauliAxis::x, 0, PauliAxis::y, 2));
  const ComplexMatrix b2 = factor(-p.dz * t, two_site_op(PauliAxis::y, 0, PauliAxis::x, 2));
  return a1 * b1 * a2 * b2;
}

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& u) {
  if (u.dim() != rho0.dim()) {
    std::ostringstream os;
    os << "evolve: propagator dim " << u.dim() << " != state dim " << rho0.dim();
    throw DimensionMismatchError(os.str());
  }
  const double udev = unitarity_deviation(u);
  if (udev > 1e-9) {
    std::ostringstream os;
    os << "evolve: propagator is not unitary (deviation " << udev << ")";
    throw NotUnitaryError(os.str());
  }
  return DensityMatrix::checked(u * rho0.matrix() * u.adjoint(), rho0.n_qubits());
}

DensityMatrix marginal(const DensityMatrix& rho, PartitionId part) {
  if (part == PartitionId::ABC) {
    throw InvalidPartitionError("marginal: ABC is the full state, not a marginal");
  }
  if (rho.n_qubits() != 3) {
    throw DimensionMismatchError("marginal expects a 3-qubit state");
  }
  const std::vector<int> keep = partition_qubits(part);
  ComplexMatrix reduced = partial_trace(rho.matrix(), {2, 2, 2}, keep);
  return DensityMatrix::checked(std::move(reduced), static_cast<int>(keep.size()));
}

}  // namespace tridm
