// Copyright 2026 The gpauli Authors
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
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace gpauli {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kEqualityTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-10;

// Dense square complex matrix of dimension >= 2. Every operator in the library
// (states, Weyl operators, projectors, Choi matrices) is carried by this type.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  explicit ComplexMatrix(Eigen::MatrixXcd entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  // |ket><bra|
  static ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra);
  static ComplexMatrix projector(const ComplexVector& psi) { return outer(psi, psi); }
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Complex& operator()(int row, int col) { return m_(row, col); }
  const Eigen::MatrixXcd& data() const { return m_; }

  ComplexMatrix adjoint() const;
  Complex trace() const { return m_.trace(); }
  bool all_finite() const;

  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double tol = kEqualityTolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= Complex(-1.0, 0.0); }

 private:
  Eigen::MatrixXcd m_;
};

struct HermitianCheckResult {
  bool is_hermitian = false;
  double max_deviation = 0.0;
};

HermitianCheckResult check_hermitian(const ComplexMatrix& x, double tol = kHermiticityTolerance);

// Sum of singular values. Throws InvalidInput on non-finite entries.
double trace_norm(const ComplexMatrix& x);
double frobenius_norm(const ComplexMatrix& x);

// Ascending eigenvalues of a Hermitian matrix; throws ContractViolation when
// the Hermiticity deviation exceeds tol.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& x, double tol = kHermiticityTolerance);
double min_eigenvalue_hermitian(const ComplexMatrix& x, double tol = kHermiticityTolerance);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Seeded sampler for reproducible random states and operators.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int uniform_int(int lo, int hi);  // inclusive bounds

  // Haar-random unit vector.
  ComplexVector pure_state(int dim);
  // Hilbert-Schmidt random density matrix.
  ComplexMatrix density_matrix(int dim);
  // Hermitian matrix with standard normal entries (GUE-like).
  ComplexMatrix hermitian(int dim);
  ComplexMatrix ginibre(int dim);
  // Haar-random unitary (QR of a Ginibre matrix with phase correction).
  ComplexMatrix unitary(int dim);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace gpauli
