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

#include "tridm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "tridm/eig.hpp"
#include "tridm/errors.hpp"

namespace tridm {

namespace {

// Clamp a quantifier into [0,1] after verifying it only ever leaves the
// interval by numerical slack.
double clamp_unit(double raw, const char* what) {
  if (raw < -1e-9 || raw > 1.0 + 1e-9) {
    std::ostringstream os;
    os << what << " outside [0,1] beyond numerical slack: " << raw;
    throw MeasureDomainError(os.str());
  }
  return std::min(1.0, std::max(0.0, raw));
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.n_qubits() != 2 || rho.dim() != 4) {
    std::ostringstream os;
    os << what << " expects a two-qubit state, got " << rho.n_qubits() << " qubits";
    throw DimensionMismatchError(os.str());
  }
}

}  // namespace

const char* info_mode_name(InfoMode m) {
  return m == InfoMode::total ? "total" : "total_minus_local";
}

InfoMode info_mode_from_string(const std::string& s) {
  if (s == "total") return InfoMode::total;
  if (s == "total_minus_local") return InfoMode::total_minus_local;
  throw DomainError("unknown info mode '" + s + "'");
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "binary_entropy argument outside [0,1]: " << x;
    throw DomainError(os.str());
  }
  x = std::min(1.0, std::max(0.0, x));
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  const ComplexMatrix syy = kron(pauli(PauliAxis::y), pauli(PauliAxis::y));
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix rho_tilde = r * syy * r.conjugate() * syy;

  // Eigenvalues at the backward-error floor of the solver are
  // indistinguishable from zero, and the square root below would amplify
  // that noise to ~1e-8; pin them to zero first.
  const double noise_floor =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, rho_tilde.frobenius_norm());

  std::vector<double> roots;
  roots.reserve(4);
  for (const Complex& ev : general_eigvals(rho_tilde)) {
    if (std::abs(ev.imag()) > 1e-8) {
      std::ostringstream os;
      os << "concurrence: spin-flip eigenvalue has imaginary part " << ev.imag();
      throw MeasureDomainError(os.str());
    }
    double lam = ev.real();
    if (lam < -1e-6) {
      std::ostringstream os;
      os << "concurrence: spin-flip eigenvalue " << lam << " below -1e-6";
      throw MeasureDomainError(os.str());
    }
    if (std::abs(lam) < noise_floor) lam = 0.0;
    if (lam < 0.0) lam = 0.0;
    roots.push_back(std::sqrt(lam));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double raw = std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
  return clamp_unit(raw, "concurrence");
}

double eof(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return clamp_unit(binary_entropy(x), "entanglement of formation");
}

double negativity(const DensityMatrix& rho) {
  require_two_qubits(rho, "negativity");
  const ComplexMatrix pt = partial_transpose(rho.matrix(), Subsystem::second);
  const EigenDecomposition ed = hermitian_eig(pt);
  double neg_sum = 0.0;
  for (double mu : ed.eigenvalues) neg_sum += std::max(0.0, -mu);
  return clamp_unit(2.0 * neg_sum, "negativity");
}

double bz_total_information(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  const double d = static_cast<double>(1 << n);
  const double raw = n * (d / (d - 1.0)) * (rho.purity() - 1.0 / d);
  // Valid states land in [0, n]; shave roundoff at the boundaries only.
  if (raw < 0.0 && raw > -1e-9) return 0.0;
  if (raw > n && raw < n + 1e-9) return static_cast<double>(n);
  return raw;
}

double nonlocal_information(const DensityMatrix& rho, InfoMode mode) {
  const int n = rho.n_qubits();
  if (n != 2 && n != 3) {
    throw DimensionMismatchError("nonlocal_information expects 2 or 3 qubits");
  }
  double info = bz_total_information(rho);
  if (mode == InfoMode::total_minus_local) {
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    for (int q = 0; q < n; ++q) {
      ComplexMatrix single = partial_trace(rho.matrix(), dims, {q});
      info -= bz_total_information(DensityMatrix::unchecked(std::move(single), 1));
    }
  }
  return info;
}

MeasureSet measure_all(const DensityMatrix& rho, InfoMode mode) {
  require_two_qubits(rho, "measure_all");
  MeasureSet out;
  out.concurrence = concurrence(rho);
  out.negativity = negativity(rho);
  out.eof = eof(rho);
  out.purity = rho.purity();
  out.info_total = bz_total_information(rho);
  out.info_nonlocal = nonlocal_information(rho, mode);
  return out;
}

}  // namespace tridm
