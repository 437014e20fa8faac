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

#include "tridm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "tridm/errors.hpp"

namespace tridm {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  const double dev = m.hermiticity_deviation();
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eig: input is not Hermitian (max deviation " << dev << ")";
    throw NotHermitianError(os.str());
  }

  const int n = m.dim();
  // Work on the Hermitian part so roundoff in the input cannot leak into
  // the iteration.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-14 * std::max(1.0, a.frobenius_norm());
  const int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double ab = std::abs(b);
        if (ab <= 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = b / ab;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * ab);
        const double sign_tau = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sign_tau / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex cph = std::conj(phase);

        // Plane unitary on columns (p,q): [[c, s], [-s*conj(phase), c*conj(phase)]].
        for (int r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - s * cph * arq;
          a(r, q) = s * arp + c * cph * arq;
        }
        for (int col = 0; col < n; ++col) {
          const Complex apc = a(p, col);
          const Complex aqc = a(q, col);
          a(p, col) = c * apc - s * phase * aqc;
          a(q, col) = s * apc + c * phase * aqc;
        }
        for (int r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - s * cph * vrq;
          v(r, q) = s * vrp + c * cph * vrq;
        }
        // The rotation annihilates this pair exactly in exact arithmetic;
        // pin it to keep the iterate Hermitian under roundoff.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }
  if (sweep == kMaxSweeps && offdiag_norm(a) > stop) {
    std::ostringstream os;
    os << "hermitian_eig: Jacobi sweep limit reached, off-diagonal residual "
       << offdiag_norm(a);
    throw NoConvergenceError(os.str());
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                     order[static_cast<std::size_t>(k)]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
  }
  return out;
}

namespace {

// Householder reduction to upper Hessenberg form, in place.
void hessenberg_reduce(ComplexMatrix& h) {
  const int n = h.dim();
  for (int k = 0; k < n - 2; ++k) {
    double col_norm = 0.0;
    for (int i = k + 1; i < n; ++i) col_norm += std::norm(h(i, k));
    col_norm = std::sqrt(col_norm);
    if (col_norm <= 1e-300) continue;

    const Complex x0 = h(k + 1, k);
    const Complex alpha = (std::abs(x0) > 0.0) ? -(x0 / std::abs(x0)) * col_norm
                                               : Complex(-col_norm, 0.0);
    std::vector<Complex> w(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    w[static_cast<std::size_t>(k + 1)] = x0 - alpha;
    for (int i = k + 2; i < n; ++i) w[static_cast<std::size_t>(i)] = h(i, k);
    double wnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) wnorm2 += std::norm(w[static_cast<std::size_t>(i)]);
    if (wnorm2 <= 1e-300) continue;

    // H <- P H P with P = I - 2 w w^dag / (w^dag w).
    for (int c = 0; c < n; ++c) {
      Complex dot = 0.0;
      for (int i = k + 1; i < n; ++i) dot += std::conj(w[static_cast<std::size_t>(i)]) * h(i, c);
      const Complex f = 2.0 * dot / wnorm2;
      for (int i = k + 1; i < n; ++i) h(i, c) -= f * w[static_cast<std::size_t>(i)];
    }
    for (int r = 0; r < n; ++r) {
      Complex dot = 0.0;
      for (int i = k + 1; i < n; ++i) dot += h(r, i) * w[static_cast<std::size_t>(i)];
      const Complex f = 2.0 / wnorm2 * dot;
      for (int i = k + 1; i < n; ++i) h(r, i) -= f * std::conj(w[static_cast<std::size_t>(i)]);
    }
    for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {half_tr + disc, half_tr - disc};
}

// Wilkinson shift: the eigenvalue of the trailing 2x2 block closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  auto [l1, l2] = eig2x2(a, b, c, d);
  return (std::abs(l1 - d) <= std::abs(l2 - d)) ? l1 : l2;
}

struct Givens {
  double c;
  Complex s;
};

// Unitary [[c, s], [-conj(s), c]] with c real, mapping (f, g) onto (r, 0).
Givens make_givens(Complex f, Complex g) {
  if (std::abs(g) <= 1e-300) return {1.0, Complex(0.0, 0.0)};
  if (std::abs(f) <= 1e-300) return {0.0, std::conj(g) / std::abs(g)};
  const Complex t = g / f;
  const double c = 1.0 / std::sqrt(1.0 + std::norm(t));
  return {c, c * std::conj(t)};
}

}  // namespace

std::vector<Complex> general_eigvals(const ComplexMatrix& m) {
  const int n = m.dim();
  if (n > 8) {
    throw DimensionMismatchError("general_eigvals supports dim <= 8, got " + std::to_string(n));
  }
  if (n == 1) return {m(0, 0)};

  ComplexMatrix h = m;
  hessenberg_reduce(h);
  const double h_norm = std::max(h.frobenius_norm(), 1e-300);

  std::vector<Complex> eigs;
  eigs.reserve(static_cast<std::size_t>(n));

  int hi = n - 1;
  int iters_on_block = 0;
  int total_iters = 0;
  const int kMaxTotal = 60 * n;

  while (hi >= 0) {
    // Deflation scan: find the top of the active unreduced block.
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (scale == 0.0) scale = h_norm;
      if (sub <= kMachineEps * scale + 1e-300) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      eigs.push_back(h(hi, hi));
      --hi;
      iters_on_block = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eigs.push_back(l1);
      eigs.push_back(l2);
      hi -= 2;
      iters_on_block = 0;
      continue;
    }

    if (++total_iters > kMaxTotal) {
      std::ostringstream os;
      os << "general_eigvals: QR iteration failed to converge; dim=" << n
         << ", active block [" << lo << "," << hi << "], subdiagonal residual "
         << std::abs(h(hi, hi - 1)) << ", matrix norm " << m.frobenius_norm();
      throw NoConvergenceError(os.str());
    }

    Complex shift;
    if (++iters_on_block % 12 == 0) {
      // Exceptional shift to break symmetry-induced stalls; deterministic.
      shift = Complex(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0);
    } else {
      shift = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    // Explicit single-shift QR step on the active block.
    for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
    std::vector<Givens> rots;
    rots.reserve(static_cast<std::size_t>(hi - lo));
    for (int i = lo; i < hi; ++i) {
      const Givens g = make_givens(h(i, i), h(i + 1, i));
      rots.push_back(g);
      for (int c = i; c <= hi; ++c) {
        const Complex top = h(i, c);
        const Complex bot = h(i + 1, c);
        h(i, c) = g.c * top + g.s * bot;
        h(i + 1, c) = -std::conj(g.s) * top + g.c * bot;
      }
      h(i + 1, i) = 0.0;
    }
    for (int i = lo; i < hi; ++i) {
      const Givens g = rots[static_cast<std::size_t>(i - lo)];
      const int rmax = std::min(i + 1, hi);
      for (int r = lo; r <= rmax; ++r) {
        const Complex left = h(r, i);
        const Complex right = h(r, i + 1);
        h(r, i) = left * g.c + right * std::conj(g.s);
        h(r, i + 1) = -left * g.s + right * g.c;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += shift;
  }

  return eigs;
}

ComplexMatrix expm_hermitian_times_minus_i_t(const ComplexMatrix& h, double t) {
  const EigenDecomposition ed = hermitian_eig(h);
  const int n = h.dim();
  const ComplexMatrix& vmat = ed.eigenvectors;
  ComplexMatrix out(n);
  // V diag(exp(-i lambda t)) V^dag
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        const Complex ph = std::exp(Complex(0.0, -ed.eigenvalues[static_cast<std::size_t>(k)] * t));
        sum += vmat(r, k) * ph * std::conj(vmat(c, k));
      }
      out(r, c) = sum;
    }
  return out;
}

double unitarity_deviation(const ComplexMatrix& u) {
  const ComplexMatrix prod = u.adjoint() * u;
  double dev = 0.0;
  const int n = u.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Complex expected = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      dev = std::max(dev, std::abs(prod(r, c) - expected));
    }
  return dev;
}

}  // namespace tridm
