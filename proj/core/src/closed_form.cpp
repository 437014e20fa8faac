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

#include "tridm/closed_form.hpp"

#include <cmath>

#include "tridm/eig.hpp"
#include "tridm/errors.hpp"
#include "tridm/model.hpp"

namespace tridm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ComplexMatrix x_matrix(Complex d00, Complex d11, Complex d22, Complex d33, Complex r21) {
  ComplexMatrix m(4);
  m(0, 0) = d00;
  m(1, 1) = d11;
  m(2, 2) = d22;
  m(3, 3) = d33;
  m(2, 1) = r21;
  m(1, 2) = std::conj(r21);
  return m;
}

ComplexMatrix elements_ab(double k, double dz, double t) {
  const double c2t = std::cos(2.0 * t), s2t = std::sin(2.0 * t);
  const double c2d = std::cos(2.0 * dz * t), s2d = std::sin(2.0 * dz * t);
  const double c4d = std::cos(4.0 * dz * t);

  const double d00 = 0.25 * k * c2d * c2d;
  const double d11 =
      0.125 * (2.0 * c2t * c2t * c2d * c2d + (3.0 + 3.0 * k - (1.0 - k) * c4d) * s2t * s2t);
  const double d22 =
      0.125 * (2.0 * s2t * s2t * c2d * c2d + (3.0 + 3.0 * k - (1.0 - k) * c4d) * c2t * c2t);
  const Complex r21 = Complex(0.125 * (2.0 * std::sqrt(3.0) * k * c2d), 0.0) -
                      Complex(0.0, std::sin(4.0 * t)) *
                          Complex(-0.5 * k * (3.0 + c4d - 2.0 * s2d * s2d), 0.0);
  const double d33 = 0.25 * (1.0 - k + s2d * s2d);
  return x_matrix(d00, d11, d22, d33, r21);
}

ComplexMatrix elements_ac(double k, double dz, double t) {
  const double c2t = std::cos(2.0 * t), s2t = std::sin(2.0 * t);
  const double c2d = std::cos(2.0 * dz * t), s2d = std::sin(2.0 * dz * t);
  const double c4t = std::cos(4.0 * t), s4d = std::sin(4.0 * dz * t);

  const double d00 = 0.25 * (1.0 - k) * s2t * s2t * s2d * s2d;
  const double d11 = 0.25 * ((1.0 - k + c2t * c2t) * c2d * c2d + (1.0 + 2.0 * k) * s2t * s2t);
  // Printed with an imaginary part on the diagonal; kept verbatim.
  const Complex d22 = 0.125 * (Complex(0.0, 2.0 * std::sqrt(3.0) * k * s2t * s2d) +
                               Complex((k - 2.0) * c2t * s4d, 0.0));
  const Complex r21 = Complex(-0.125 * (k - 3.0 - (1.0 - k) * c4t) * s2d * s2d, 0.0);
  const double d33 =
      (1.0 / 16.0) *
      (7.0 + (1.0 + 4.0 * k) * c4t +
       8.0 * std::cos(t) * std::cos(t) * std::cos(4.0 * dz * t) * std::sin(t) * std::sin(t));
  return x_matrix(d00, d11, d22, d33, r21);
}

ComplexMatrix elements_bc(double k, double dz, double t) {
  const double c2t = std::cos(2.0 * t), s2t = std::sin(2.0 * t);
  const double c2d = std::cos(2.0 * dz * t), s2d = std::sin(2.0 * dz * t);
  const double c4t = std::cos(4.0 * t);

  const double d00 = 0.25 * (1.0 - k) * c2t * c2t * s2d * s2d;
  const double d11 = 0.25 * ((1.0 - k + s2t * s2t) * c2d * c2d + (1.0 + 2.0 * k) * c2t * c2t);
  // Printed with an imaginary part on the diagonal; kept verbatim.
  const Complex d22 =
      0.125 * k * s2d *
      Complex(-2.0 * std::sqrt(3.0) * c2t,
              std::sin(2.0 * (1.0 + dz) * t) + std::sin(2.0 * (1.0 - dz) * t));
  const Complex r21 = Complex(0.25 * (1.0 + (1.0 - k) * s2t * s2t) * s2d * s2d, 0.0);
  // Final diagonal element; the non-squared cos(2 dz t) term is as printed.
  const double d33 = 0.125 * (3.0 - (1.0 + 2.0 * k) * c4t + 2.0 * c2t * c2t * c2d);
  return x_matrix(d00, d11, d22, d33, r21);
}

}  // namespace

SystemParams closed_form_convention(double kappa, double dz) {
  return SystemParams(kPi / 3.0, kPi / 2.0, kappa, 2.0, dz);
}

ComplexMatrix closed_form_matrix(double kappa, double dz, double t, PartitionId pair) {
  switch (pair) {
    case PartitionId::AB: return elements_ab(kappa, dz, t);
    case PartitionId::AC: return elements_ac(kappa, dz, t);
    case PartitionId::BC: return elements_bc(kappa, dz, t);
    default:
      throw InvalidPartitionError("closed_form_matrix: pair must be AB, AC or BC");
  }
}

ClosedFormMarginal closed_form_marginal(const SystemParams& p, double t, PartitionId pair) {
  ClosedFormMarginal out{closed_form_matrix(p.kappa, p.dz, t, pair), {}};
  const ComplexMatrix& m = out.matrix;

  out.report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  out.report.hermiticity_deviation = m.hermiticity_deviation();

  ComplexMatrix herm_part(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) herm_part(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  out.report.min_eigenvalue = hermitian_eig(herm_part).eigenvalues.back();

  const SystemParams conv = closed_form_convention(p.kappa, p.dz);
  const DensityMatrix rho0 = initial_state(conv);
  const DensityMatrix exact_marg = marginal(evolve(rho0, exact_propagator(conv, t)), pair);
  const DensityMatrix fact_marg = marginal(evolve(rho0, factorized_propagator(conv, t)), pair);
  out.report.distance_exact = (m - exact_marg.matrix()).frobenius_norm();
  out.report.distance_factorized = (m - fact_marg.matrix()).frobenius_norm();
  return out;
}

}  // namespace tridm
