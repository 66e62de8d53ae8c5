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

#include "gpauli/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

int mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// exp(i pi n / d), with n reduced mod 2d.
Complex half_root_pow(long long n, int d) {
  const int r = mod(n, 2 * d);
  return std::polar(1.0, std::numbers::pi * r / d);
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

WeylBasis::WeylBasis(int dim) : dim_(dim) {
  if (dim < 2) throw InvalidInput("Weyl basis needs d >= 2, got " + std::to_string(dim));
  ComplexMatrix x(dim);
  ComplexMatrix z(dim);
  for (int m = 0; m < dim; ++m) {
    x((m + 1) % dim, m) = 1.0;
    z(m, m) = omega_pow(m);
  }
  std::vector<ComplexMatrix> x_pow{ComplexMatrix::identity(dim)};
  std::vector<ComplexMatrix> z_pow{ComplexMatrix::identity(dim)};
  for (int p = 1; p < dim; ++p) {
    x_pow.push_back(x_pow.back() * x);
    z_pow.push_back(z_pow.back() * z);
  }
  ops_.reserve(static_cast<std::size_t>(dim) * dim);
  for (int k = 0; k < dim; ++k) {
    for (int l = 0; l < dim; ++l) ops_.push_back(x_pow[l] * z_pow[k]);
  }
}

Complex WeylBasis::omega() const { return omega_pow(1); }

Complex WeylBasis::omega_pow(long long n) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * mod(n, dim_) / dim_);
}

const ComplexMatrix& WeylBasis::at(int k, int l) const {
  return ops_[static_cast<std::size_t>(mod(k, dim_)) * dim_ + mod(l, dim_)];
}

WeylBasis weyl_basis(int dim) { return WeylBasis(dim); }

std::vector<CommutingClass> commuting_classes(const WeylBasis& basis) {
  const int d = basis.dim();
  if (!is_prime(d)) {
    throw UnsupportedDimension("commuting classes require prime d, got " + std::to_string(d));
  }
  std::vector<WeylIndex> generators{{1, 0}};
  for (int k = 0; k < d; ++k) generators.push_back({k, 1});

  std::vector<CommutingClass> classes;
  classes.reserve(generators.size());
  for (const auto& g : generators) {
    CommutingClass cls;
    for (int m = 1; m < d; ++m) cls.push_back({mod(m * g.k, d), mod(m * g.l, d)});
    classes.push_back(std::move(cls));
  }
  return classes;
}

void MubFamily::check_alpha(int alpha) const {
  if (alpha < 1 || alpha > dim_ + 1) {
    throw IndexOutOfRange("basis index " + std::to_string(alpha) + " outside 1.." +
                          std::to_string(dim_ + 1));
  }
}

const std::vector<ComplexVector>& MubFamily::basis(int alpha) const {
  check_alpha(alpha);
  return bases_[alpha - 1];
}

const ComplexVector& MubFamily::vector(int alpha, int l) const {
  const auto& b = basis(alpha);
  if (l < 0 || l >= dim_) throw IndexOutOfRange("vector index " + std::to_string(l));
  return b[l];
}

const ComplexMatrix& MubFamily::projector(int alpha, int l) const {
  check_alpha(alpha);
  if (l < 0 || l >= dim_) throw IndexOutOfRange("projector index " + std::to_string(l));
  return projectors_[alpha - 1][l];
}

const ComplexMatrix& MubFamily::unitary(int alpha) const {
  check_alpha(alpha);
  return unitaries_[alpha - 1];
}

ComplexMatrix MubFamily::unitary_power(int alpha, int k) const {
  check_alpha(alpha);
  const auto& b = basis_matrices_[alpha - 1];
  Eigen::VectorXcd phases(dim_);
  for (int l = 0; l < dim_; ++l) phases(l) = half_root_pow(2LL * l * k, dim_);
  return ComplexMatrix(Eigen::MatrixXcd(b * phases.asDiagonal() * b.adjoint()));
}

std::string MubFamily::generator_label(int alpha) const {
  check_alpha(alpha);
  if (alpha == 1) return "Z";
  const int k = alpha - 2;
  if (k == 0) return "X";
  if (k == 1) return "XZ";
  return "XZ^" + std::to_string(k);
}

WeylIndex MubFamily::generator_index(int alpha) const {
  check_alpha(alpha);
  if (alpha == 1) return {1, 0};
  return {alpha - 2, 1};
}

ComplexMatrix MubFamily::dephase(int alpha, const ComplexMatrix& rho) const {
  check_alpha(alpha);
  if (rho.dim() != dim_) throw DimensionMismatch("dephase: matrix dimension mismatch");
  const auto& b = basis_matrices_[alpha - 1];
  const Eigen::VectorXcd diag = (b.adjoint() * rho.data() * b).diagonal();
  return ComplexMatrix(Eigen::MatrixXcd(b * diag.asDiagonal() * b.adjoint()));
}

MubFamily mub_family(int dim) {
  if (dim < 2) throw InvalidInput("MUB family needs d >= 2, got " + std::to_string(dim));
  if (!is_prime(dim)) {
    throw UnsupportedDimension("complete MUB construction implemented for prime d only, got " +
                               std::to_string(dim));
  }
  const int d = dim;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  MubFamily fam(d);

  // Z eigenbasis: computational basis, eigenvalue omega^j on |j>.
  {
    std::vector<ComplexVector> basis;
    for (int j = 0; j < d; ++j) basis.push_back(ComplexVector::Unit(d, j));
    fam.bases_.push_back(std::move(basis));
  }
  // X Z^k has eigenvalues zeta omega^j with zeta = exp(i pi k (d-1) / d); the
  // eigenvector has amplitudes v_m = zeta^-m omega^(k m (m-1)/2 - j m) / sqrt(d).
  // All phases are integer multiples of pi/d, kept exact until the last step.
  for (int k = 0; k < d; ++k) {
    std::vector<std::pair<int, ComplexVector>> keyed;
    for (int j = 0; j < d; ++j) {
      ComplexVector v(d);
      for (long long m = 0; m < d; ++m) {
        const long long n = k * m * (m - 1) - static_cast<long long>(k) * (d - 1) * m - 2LL * j * m;
        v(m) = amp * half_root_pow(n, d);
      }
      const int phase_key = mod(static_cast<long long>(k) * (d - 1) + 2LL * j, 2 * d);
      keyed.emplace_back(phase_key, std::move(v));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ComplexVector> basis;
    for (auto& kv : keyed) basis.push_back(std::move(kv.second));
    fam.bases_.push_back(std::move(basis));
  }

  for (auto& basis : fam.bases_) {
    // First nonzero amplitude real and positive.
    for (auto& v : basis) {
      for (int m = 0; m < d; ++m) {
        if (std::abs(v(m)) > 1e-14) {
          v *= std::conj(v(m)) / std::abs(v(m));
          v(m) = std::abs(v(m));
          break;
        }
      }
    }
    Eigen::MatrixXcd b(d, d);
    std::vector<ComplexMatrix> projs;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
    for (int l = 0; l < d; ++l) {
      b.col(l) = basis[l];
      projs.push_back(ComplexMatrix::projector(basis[l]));
      u += half_root_pow(2LL * l, d) * projs.back().data();
    }
    fam.basis_matrices_.push_back(std::move(b));
    fam.projectors_.push_back(std::move(projs));
    fam.unitaries_.emplace_back(std::move(u));
  }
  return fam;
}

std::vector<OverlapRow> cross_overlaps(const MubFamily& family) {
  std::vector<OverlapRow> rows;
  for (int a = 1; a <= family.size(); ++a) {
    for (int b = a + 1; b <= family.size(); ++b) {
      for (int k = 0; k < family.dim(); ++k) {
        for (int l = 0; l < family.dim(); ++l) {
          rows.push_back({a, k, b, l, std::norm(family.vector(a, k).dot(family.vector(b, l)))});
        }
      }
    }
  }
  return rows;
}

Superoperator decoherence_channel(const MubFamily& family, int alpha) {
  std::vector<ConjugationTerm> terms;
  for (int l = 0; l < family.dim(); ++l) terms.push_back({1.0, family.projector(alpha, l)});
  return Superoperator(family.dim(), std::move(terms));
}

Superoperator unitary_mixing_map(const MubFamily& family, int alpha) {
  std::vector<ConjugationTerm> terms;
  for (int k = 1; k < family.dim(); ++k) terms.push_back({1.0, family.unitary_power(alpha, k)});
  return Superoperator(family.dim(), std::move(terms));
}

}  // namespace gpauli
