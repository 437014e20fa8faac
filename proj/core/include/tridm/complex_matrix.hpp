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

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace tridm {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major storage. The code base only ever
/// needs dimensions 2, 4 and 8, so everything is kept simple and value-like.
/// There is deliberately no operator==; compare with approx_equal.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }
  std::size_t size() const { return a_.size(); }

  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  std::span<const Complex> entries() const { return a_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  /// Largest entry magnitude; the metric used by the tolerance checks.
  double max_abs() const;

  bool is_hermitian(double tol) const;
  /// Max-entry deviation from Hermiticity, max |a_ij - conj(a_ji)|.
  double hermiticity_deviation() const;

  bool approx_equal(const ComplexMatrix& other, double tol = kDefaultTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  int dim_;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

enum class PauliAxis { x, y, z };

/// 2x2 Pauli matrix in the basis order (|e>, |g>) = (|0>, |1>).
/// sigma_y uses the [[0, i], [-i, 0]] sign convention; every shipped
/// quantifier is invariant under that sign choice.
ComplexMatrix pauli(PauliAxis axis);

/// Kronecker product, left factor most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduce over the subsystems not listed in `keep`. `dims` are the factor
/// dimensions of rho (their product must equal rho.dim()); kept subsystems
/// stay in their original relative order. Trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

enum class Subsystem { first, second };

/// Partial transpose of a two-qubit (4x4) operator over one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem which);

}  // namespace tridm
