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

#include "gpauli/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

void require_finite(const ComplexMatrix& x, const char* op) {
  if (!x.all_finite()) throw InvalidInput(std::string(op) + ": non-finite matrix entry");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) {
  if (dim < 2) throw InvalidInput("matrix dimension must be >= 2, got " + std::to_string(dim));
  m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("matrix must be square");
  if (m_.rows() < 2) throw InvalidInput("matrix dimension must be >= 2");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix id(dim);
  id.m_.setIdentity();
  return id;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& ket, const ComplexVector& bra) {
  if (ket.size() != bra.size()) throw DimensionMismatch("outer: vector sizes differ");
  return ComplexMatrix(Eigen::MatrixXcd(ket * bra.adjoint()));
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m.m_(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Eigen::MatrixXcd(m_.adjoint())); }

bool ComplexMatrix::all_finite() const { return m_.allFinite(); }

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim() == other.dim() && max_abs_diff(other) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  m_ += rhs.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  m_ -= rhs.m_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  return ComplexMatrix(Eigen::MatrixXcd(lhs.m_ * rhs.m_));
}

HermitianCheckResult check_hermitian(const ComplexMatrix& x, double tol) {
  HermitianCheckResult r;
  r.max_deviation = (x.data() - x.data().adjoint()).cwiseAbs().maxCoeff();
  r.is_hermitian = r.max_deviation <= tol;
  return r;
}

double trace_norm(const ComplexMatrix& x) {
  require_finite(x, "trace_norm");
  // Hermitian inputs (the common case) take the cheaper eigenvalue route.
  const double scale = std::max(1.0, x.data().cwiseAbs().maxCoeff());
  if (check_hermitian(x).max_deviation <= 1e-14 * scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.data(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x.data());
  return svd.singularValues().sum();
}

double frobenius_norm(const ComplexMatrix& x) {
  require_finite(x, "frobenius_norm");
  return x.data().norm();
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& x, double tol) {
  require_finite(x, "eigenvalues_hermitian");
  const auto check = check_hermitian(x, tol);
  if (!check.is_hermitian) {
    throw ContractViolation("matrix is not Hermitian (max deviation " +
                            std::to_string(check.max_deviation) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.data(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue_hermitian(const ComplexMatrix& x, double tol) {
  return eigenvalues_hermitian(x, tol).front();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  Eigen::MatrixXcd out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.data();
  }
  return ComplexMatrix(std::move(out));
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.data().adjoint() * b.data()).trace();
}

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomSource::normal() { return normal_(engine_); }

int RandomSource::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

ComplexVector RandomSource::pure_state(int dim) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(normal(), normal());
  return v / v.norm();
}

ComplexMatrix RandomSource::ginibre(int dim) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(), normal());
  }
  return g;
}

ComplexMatrix RandomSource::density_matrix(int dim) {
  const ComplexMatrix g = ginibre(dim);
  ComplexMatrix rho = g * g.adjoint();
  return (1.0 / rho.trace().real()) * rho;
}

ComplexMatrix RandomSource::hermitian(int dim) {
  const ComplexMatrix g = ginibre(dim);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix RandomSource::unitary(int dim) {
  const ComplexMatrix g = ginibre(dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g.data());
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return ComplexMatrix(std::move(q));
}

}  // namespace gpauli
