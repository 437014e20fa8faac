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

#include "tridm/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "tridm/errors.hpp"

namespace tridm {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim <= 0) {
    throw DimensionMismatchError("ComplexMatrix dimension must be positive, got " +
                                 std::to_string(dim));
  }
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != a_.size()) {
    throw DimensionMismatchError("entry count " + std::to_string(entries.size()) +
                                 " does not match dim^2 = " + std::to_string(a_.size()));
  }
  std::size_t i = 0;
  for (const Complex& v : entries) a_[i++] = v;
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_deviation() const {
  double dev = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_deviation() <= tol; }

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (std::abs(a_[i] - other.a_[i]) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatchError("matrix addition dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatchError("matrix subtraction dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionMismatchError("matrix product dimension mismatch");
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex lrk = lhs(r, k);
      if (lrk == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n; ++c) out(r, c) += lrk * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix pauli(PauliAxis axis) {
  ComplexMatrix m(2);
  switch (axis) {
    case PauliAxis::x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::y:
      m(0, 1) = Complex(0.0, 1.0);
      m(1, 0) = Complex(0.0, -1.0);
      break;
    case PauliAxis::z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ra = 0; ra < na; ++ra)
    for (int ca = 0; ca < na; ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex(0.0, 0.0)) continue;
      for (int rb = 0; rb < nb; ++rb)
        for (int cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
    }
  return out;
}

namespace {

// Mixed-radix digits of `index` for the given factor dimensions,
// most significant factor first.
void decompose(int index, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

int compose(const std::vector<int>& digits, const std::vector<int>& dims) {
  int index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  int product = 1;
  for (int d : dims) product *= d;
  if (product != rho.dim()) {
    throw DimensionMismatchError("partial_trace: product of dims " + std::to_string(product) +
                                 " != matrix dim " + std::to_string(rho.dim()));
  }
  if (keep.empty()) throw DimensionMismatchError("partial_trace: keep set must be nonempty");
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims.size())) {
      throw DimensionMismatchError("partial_trace: keep index " + std::to_string(k) +
                                   " out of range");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }

  std::vector<int> keep_sorted;
  std::vector<int> traced;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? keep_sorted : traced).push_back(static_cast<int>(k));

  int dim_keep = 1;
  for (int k : keep_sorted) dim_keep *= dims[static_cast<std::size_t>(k)];
  int dim_traced = 1;
  for (int k : traced) dim_traced *= dims[static_cast<std::size_t>(k)];

  std::vector<int> keep_dims, traced_dims;
  for (int k : keep_sorted) keep_dims.push_back(dims[static_cast<std::size_t>(k)]);
  for (int k : traced) traced_dims.push_back(dims[static_cast<std::size_t>(k)]);

  ComplexMatrix out(dim_keep);
  std::vector<int> kr(keep_dims.size()), kc(keep_dims.size()), td(std::max<std::size_t>(traced_dims.size(), 1));
  std::vector<int> full_row(dims.size()), full_col(dims.size());
  for (int r = 0; r < dim_keep; ++r) {
    decompose(r, keep_dims, kr);
    for (int c = 0; c < dim_keep; ++c) {
      decompose(c, keep_dims, kc);
      Complex sum = 0.0;
      for (int t = 0; t < dim_traced; ++t) {
        if (!traced_dims.empty()) decompose(t, traced_dims, td);
        for (std::size_t k = 0; k < keep_sorted.size(); ++k) {
          full_row[static_cast<std::size_t>(keep_sorted[k])] = kr[k];
          full_col[static_cast<std::size_t>(keep_sorted[k])] = kc[k];
        }
        for (std::size_t k = 0; k < traced.size(); ++k) {
          full_row[static_cast<std::size_t>(traced[k])] = td[k];
          full_col[static_cast<std::size_t>(traced[k])] = td[k];
        }
        sum += rho(compose(full_row, dims), compose(full_col, dims));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem which) {
  if (rho.dim() != 4) {
    throw DimensionMismatchError("partial_transpose expects a 4x4 matrix, got dim " +
                                 std::to_string(rho.dim()));
  }
  ComplexMatrix out(4);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < 2; ++j) {
          if (which == Subsystem::second) {
            // transpose the second factor: (a i | b j) <- (a j | b i)
            out(2 * a + i, 2 * b + j) = rho(2 * a + j, 2 * b + i);
          } else {
            out(2 * a + i, 2 * b + j) = rho(2 * b + i, 2 * a + j);
          }
        }
  return out;
}

}  // namespace tridm
