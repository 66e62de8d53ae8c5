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

#include <string>
#include <vector>

#include "gpauli/linalg.hpp"
#include "gpauli/superop.hpp"

namespace gpauli {

bool is_prime(int n);

struct WeylIndex {
  int k = 0;
  int l = 0;
  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
  friend auto operator<=>(const WeylIndex&, const WeylIndex&) = default;
};

// The d^2 Weyl operators W_kl = X^l Z^k built from the shift X|m> = |m+1>
// and the clock Z|m> = omega^m |m>, omega = exp(2 pi i / d).
class WeylBasis {
 public:
  explicit WeylBasis(int dim);

  int dim() const { return dim_; }
  Complex omega() const;
  // omega^n with the exponent reduced mod d before evaluation.
  Complex omega_pow(long long n) const;

  // Indices are taken mod d, so negative values are allowed.
  const ComplexMatrix& at(int k, int l) const;
  const ComplexMatrix& at(WeylIndex i) const { return at(i.k, i.l); }
  const ComplexMatrix& shift() const { return at(0, 1); }
  const ComplexMatrix& clock() const { return at(1, 0); }

 private:
  int dim_;
  std::vector<ComplexMatrix> ops_;  // row-major in (k, l)
};

WeylBasis weyl_basis(int dim);

using CommutingClass = std::vector<WeylIndex>;

// The d+1 orbits {W_{mk, ml} : m = 1..d-1} of nontrivial Weyl operators, listed
// in MUB order: the class of Z first, then the class of X Z^k for k = 0..d-1.
// Within a class, entries are ordered by the multiplier m. Requires prime d.
std::vector<CommutingClass> commuting_classes(const WeylBasis& basis);

// A complete set of d+1 mutually unbiased bases for prime d, together with the
// rank-one projectors P_l and the unitaries U = sum_l omega^l P_l per basis.
//
// Basis alpha (1-based) is the eigenbasis of Z for alpha = 1 and of X Z^(alpha-2)
// for alpha = 2..d+1. Vectors within a basis are ordered by the phase of their
// eigenvalue in [0, 2 pi) and carry a real positive first nonzero amplitude.
class MubFamily {
 public:
  int dim() const { return dim_; }
  int size() const { return dim_ + 1; }

  const std::vector<ComplexVector>& basis(int alpha) const;
  const ComplexVector& vector(int alpha, int l) const;
  const ComplexMatrix& projector(int alpha, int l) const;
  const ComplexMatrix& unitary(int alpha) const;
  // U_alpha^k for any integer k (taken mod d).
  ComplexMatrix unitary_power(int alpha, int k) const;
  // Operator whose eigenbasis defines basis alpha ("Z", "X", "XZ", "XZ^2", ...).
  std::string generator_label(int alpha) const;
  // Weyl operator generating basis alpha: Z = W_10, X Z^k = W_k1.
  WeylIndex generator_index(int alpha) const;

  // Phi_alpha[rho] = sum_l P_l rho P_l, evaluated through the basis change.
  ComplexMatrix dephase(int alpha, const ComplexMatrix& rho) const;

  friend MubFamily mub_family(int dim);

 private:
  explicit MubFamily(int dim) : dim_(dim) {}
  void check_alpha(int alpha) const;

  int dim_;
  std::vector<std::vector<ComplexVector>> bases_;
  std::vector<Eigen::MatrixXcd> basis_matrices_;  // columns are the basis vectors
  std::vector<std::vector<ComplexMatrix>> projectors_;
  std::vector<ComplexMatrix> unitaries_;
};

MubFamily mub_family(int dim);

struct OverlapRow {
  int alpha = 0;
  int k = 0;
  int beta = 0;
  int l = 0;
  double overlap = 0.0;  // |<psi_k^alpha | psi_l^beta>|^2
};

// All cross-basis overlaps for alpha < beta: d^2 (d+1) d / 2 rows.
std::vector<OverlapRow> cross_overlaps(const MubFamily& family);

// Quantum-classical channel Phi_alpha as a conjugation sum over the projectors.
Superoperator decoherence_channel(const MubFamily& family, int alpha);

// sum_{k=1}^{d-1} U_alpha^k rho U_alpha^k^dagger; equals d Phi_alpha - id.
Superoperator unitary_mixing_map(const MubFamily& family, int alpha);

}  // namespace gpauli
