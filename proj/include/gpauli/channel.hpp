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

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gpauli/linalg.hpp"
#include "gpauli/mub.hpp"
#include "gpauli/superop.hpp"

namespace gpauli {

// Spectral coordinates of a generalized Pauli channel.
//   p   = (p_0, p_1, ..., p_{d+1})      length d+2
//   lam = (lambda_1, ..., lambda_{d+1})  length d+1, lambda_0 = 1 implied
std::vector<double> eigenvalues_from_probabilities(int dim, std::span<const double> p);
std::vector<double> probabilities_from_eigenvalues(int dim, std::span<const double> lam);

struct CpVerdict {
  bool cp = false;
  // sum(lambda) + 1/(d-1); nonnegative when the lower bound holds
  double lower_slack = 0.0;
  // 1 + d min(lambda) - sum(lambda); nonnegative when the upper bound holds
  double upper_slack = 0.0;
  // min of the two slacks: distance to the nearest bound, negative when violated
  double margin = 0.0;
};

inline constexpr double kCpSlack = 1e-12;

// -1/(d-1) <= sum_b lambda_b <= 1 + d min_b lambda_b
CpVerdict fujiwara_check(int dim, std::span<const double> lam, double slack = kCpSlack);

// Qubit form |1 +- lambda_3| >= |lambda_1 +- lambda_2|.
bool fujiwara_algoet_qubit(std::span<const double> lam, double slack = kCpSlack);

// Lambda[rho] = Tr(rho) I/d + sum_a lambda_a (Phi_a[rho] - Tr(rho) I/d)
ComplexMatrix spectral_apply(const MubFamily& family, std::span<const double> lam, const ComplexMatrix& rho);

// Generalized Pauli channel p_0 id + 1/(d-1) sum_a p_a U_a. Stores both
// coordinate systems, synchronized once at construction. Immutable.
class GenPauliChannel {
 public:
  int dim() const { return family_->dim(); }
  const MubFamily& family() const { return *family_; }
  std::shared_ptr<const MubFamily> family_ptr() const { return family_; }

  const std::vector<double>& probabilities() const { return p_; }
  const std::vector<double>& eigenvalues() const { return lam_; }
  // lambda(0) == 1; lambda(a) for a = 1..d+1
  double lambda(int alpha) const;

  const CpVerdict& cp_verdict() const { return cp_; }
  bool cp_flag() const { return cp_.cp; }

  // Conjugation-sum (Kraus-like) form; weights may be negative for non-CP maps.
  Superoperator superoperator() const;
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix apply_spectral(const ComplexMatrix& rho) const;

  friend GenPauliChannel channel_from_probabilities(std::shared_ptr<const MubFamily>, std::vector<double>);
  friend GenPauliChannel channel_from_eigenvalues(std::shared_ptr<const MubFamily>, std::vector<double>);

 private:
  GenPauliChannel(std::shared_ptr<const MubFamily> family, std::vector<double> p, std::vector<double> lam);

  std::shared_ptr<const MubFamily> family_;
  std::vector<double> p_;
  std::vector<double> lam_;
  CpVerdict cp_;
};

GenPauliChannel channel_from_probabilities(std::shared_ptr<const MubFamily> family, std::vector<double> p);
GenPauliChannel channel_from_eigenvalues(std::shared_ptr<const MubFamily> family, std::vector<double> lam);

CpVerdict is_cp_fujiwara(const GenPauliChannel& channel);

// Choi matrix (1/d) sum_ij |i><j| (x) Lambda[|i><j|], trace one for TP maps.
struct ChoiMatrix {
  int dim = 0;
  ComplexMatrix matrix{2};

  double min_eigenvalue() const;
  bool is_cp(double tol = kHermiticityTolerance) const { return min_eigenvalue() >= -tol; }
  // Tr over the output factor; I/d for trace-preserving maps.
  ComplexMatrix input_marginal() const;
};

ChoiMatrix choi_matrix(const Superoperator& map);
ChoiMatrix choi_matrix(const GenPauliChannel& channel);

// Lambda_W[rho] = sum_kl p_kl W_kl rho W_kl^dagger
class WeylChannel {
 public:
  // weights(k, l) multiplies W_kl
  WeylChannel(std::shared_ptr<const WeylBasis> basis, Eigen::MatrixXd weights);

  int dim() const { return basis_->dim(); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  const WeylBasis& basis() const { return *basis_; }

 private:
  std::shared_ptr<const WeylBasis> basis_;
  Eigen::MatrixXd weights_;
};

ComplexMatrix weyl_channel_apply(const WeylChannel& channel, const ComplexMatrix& rho);

// Re-express a generalized Pauli channel (prime d) as a Weyl channel whose
// weights are constant on each commuting class: p_kl = p_a / (d-1).
WeylChannel weyl_channel_from_pauli(const GenPauliChannel& channel);

}  // namespace gpauli
