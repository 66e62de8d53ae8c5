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

#include "gpauli/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

void require_length(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(v.size()));
  }
}

void require_dim(int dim) {
  if (dim < 2) throw InvalidInput("channel dimension must be >= 2, got " + std::to_string(dim));
}

}  // namespace

std::vector<double> eigenvalues_from_probabilities(int dim, std::span<const double> p) {
  require_dim(dim);
  require_length(p, static_cast<std::size_t>(dim) + 2, "probabilities");
  require_finite(p, "probabilities");
  const double total = std::accumulate(p.begin() + 1, p.end(), 0.0);
  std::vector<double> lam(dim + 1);
  for (int a = 1; a <= dim + 1; ++a) {
    const double others = total - p[a];
    lam[a - 1] = p[0] + p[a] - others / (dim - 1);
  }
  return lam;
}

std::vector<double> probabilities_from_eigenvalues(int dim, std::span<const double> lam) {
  require_dim(dim);
  require_length(lam, static_cast<std::size_t>(dim) + 1, "eigenvalues");
  require_finite(lam, "eigenvalues");
  const double d = dim;
  const double total = std::accumulate(lam.begin(), lam.end(), 0.0);
  std::vector<double> p(dim + 2);
  p[0] = (1.0 + (d - 1.0) * total) / (d * d);
  for (int a = 1; a <= dim + 1; ++a) {
    const double own = lam[a - 1];
    p[a] = (d - 1.0) / (d * d) * (1.0 + (d - 1.0) * own - (total - own));
  }
  return p;
}

CpVerdict fujiwara_check(int dim, std::span<const double> lam, double slack) {
  require_dim(dim);
  require_length(lam, static_cast<std::size_t>(dim) + 1, "eigenvalues");
  require_finite(lam, "eigenvalues");
  const double total = std::accumulate(lam.begin(), lam.end(), 0.0);
  const double lowest = *std::min_element(lam.begin(), lam.end());
  CpVerdict v;
  v.lower_slack = total + 1.0 / (dim - 1);
  v.upper_slack = 1.0 + dim * lowest - total;
  v.margin = std::min(v.lower_slack, v.upper_slack);
  v.cp = v.margin >= -slack;
  return v;
}

bool fujiwara_algoet_qubit(std::span<const double> lam, double slack) {
  require_length(lam, 3, "qubit eigenvalues");
  require_finite(lam, "qubit eigenvalues");
  return std::abs(1.0 + lam[2]) >= std::abs(lam[0] + lam[1]) - slack &&
         std::abs(1.0 - lam[2]) >= std::abs(lam[0] - lam[1]) - slack;
}

ComplexMatrix spectral_apply(const MubFamily& family, std::span<const double> lam, const ComplexMatrix& rho) {
  const int d = family.dim();
  require_length(lam, static_cast<std::size_t>(d) + 1, "eigenvalues");
  if (rho.dim() != d) throw DimensionMismatch("spectral_apply: matrix dimension mismatch");
  const ComplexMatrix mixed = (rho.trace() / static_cast<double>(d)) * ComplexMatrix::identity(d);
  ComplexMatrix out = mixed;
  for (int a = 1; a <= d + 1; ++a) {
    out += Complex(lam[a - 1], 0.0) * (family.dephase(a, rho) - mixed);
  }
  return out;
}

GenPauliChannel::GenPauliChannel(std::shared_ptr<const MubFamily> family, std::vector<double> p,
                                 std::vector<double> lam)
    : family_(std::move(family)), p_(std::move(p)), lam_(std::move(lam)) {
  cp_ = fujiwara_check(family_->dim(), lam_);
}

double GenPauliChannel::lambda(int alpha) const {
  if (alpha == 0) return 1.0;
  if (alpha < 0 || alpha > dim() + 1) throw IndexOutOfRange("eigenvalue index " + std::to_string(alpha));
  return lam_[alpha - 1];
}

Superoperator GenPauliChannel::superoperator() const {
  const int d = dim();
  Superoperator map = p_[0] * Superoperator::identity(d);
  for (int a = 1; a <= d + 1; ++a) map = map + (p_[a] / (d - 1)) * unitary_mixing_map(*family_, a);
  return map;
}

ComplexMatrix GenPauliChannel::apply(const ComplexMatrix& rho) const {
  const int d = dim();
  if (rho.dim() != d) throw DimensionMismatch("channel apply: matrix dimension mismatch");
  ComplexMatrix out = p_[0] * rho;
  for (int a = 1; a <= d + 1; ++a) {
    const double w = p_[a] / (d - 1);
    if (w == 0.0) continue;
    for (int k = 1; k < d; ++k) {
      const ComplexMatrix u = family_->unitary_power(a, k);
      out += w * (u * rho * u.adjoint());
    }
  }
  return out;
}

ComplexMatrix GenPauliChannel::apply_spectral(const ComplexMatrix& rho) const {
  return spectral_apply(*family_, lam_, rho);
}

GenPauliChannel channel_from_probabilities(std::shared_ptr<const MubFamily> family, std::vector<double> p) {
  if (!family) throw InvalidInput("channel needs a MUB family");
  auto lam = eigenvalues_from_probabilities(family->dim(), p);
  return GenPauliChannel(std::move(family), std::move(p), std::move(lam));
}

GenPauliChannel channel_from_eigenvalues(std::shared_ptr<const MubFamily> family, std::vector<double> lam) {
  if (!family) throw InvalidInput("channel needs a MUB family");
  auto p = probabilities_from_eigenvalues(family->dim(), lam);
  return GenPauliChannel(std::move(family), std::move(p), std::move(lam));
}

CpVerdict is_cp_fujiwara(const GenPauliChannel& channel) { return channel.cp_verdict(); }

double ChoiMatrix::min_eigenvalue() const { return min_eigenvalue_hermitian(matrix); }

ComplexMatrix ChoiMatrix::input_marginal() const {
  ComplexMatrix out(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out(i, j) = matrix.data().block(i * dim, j * dim, dim, dim).trace();
    }
  }
  return out;
}

ChoiMatrix choi_matrix(const Superoperator& map) {
  const int d = map.dim();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ComplexMatrix e(d);
      e(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = map.apply(e).data() / static_cast<double>(d);
    }
  }
  return ChoiMatrix{d, ComplexMatrix(std::move(c))};
}

ChoiMatrix choi_matrix(const GenPauliChannel& channel) { return choi_matrix(channel.superoperator()); }

WeylChannel::WeylChannel(std::shared_ptr<const WeylBasis> basis, Eigen::MatrixXd weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
  if (!basis_) throw InvalidInput("Weyl channel needs a Weyl basis");
  if (weights_.rows() != basis_->dim() || weights_.cols() != basis_->dim()) {
    throw DimensionMismatch("Weyl channel weights must be d x d");
  }
  if (!weights_.allFinite()) throw InvalidInput("Weyl channel weights: non-finite entry");
}

ComplexMatrix weyl_channel_apply(const WeylChannel& channel, const ComplexMatrix& rho) {
  const int d = channel.dim();
  if (rho.dim() != d) throw DimensionMismatch("Weyl channel apply: matrix dimension mismatch");
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const double w = channel.weights()(k, l);
      if (w == 0.0) continue;
      const ComplexMatrix& op = channel.basis().at(k, l);
      out += w * (op * rho * op.adjoint());
    }
  }
  return out;
}

WeylChannel weyl_channel_from_pauli(const GenPauliChannel& channel) {
  const int d = channel.dim();
  auto basis = std::make_shared<const WeylBasis>(d);
  const auto classes = commuting_classes(*basis);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
  w(0, 0) = channel.probabilities()[0];
  for (int a = 1; a <= d + 1; ++a) {
    for (const auto& idx : classes[a - 1]) w(idx.k, idx.l) = channel.probabilities()[a] / (d - 1);
  }
  return WeylChannel(std::move(basis), std::move(w));
}

}  // namespace gpauli
