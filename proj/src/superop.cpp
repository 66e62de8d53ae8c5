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

#include "gpauli/superop.hpp"

#include <string>

#include "gpauli/errors.hpp"

namespace gpauli {

Superoperator::Superoperator(int dim, std::vector<ConjugationTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.op.dim() != dim_) {
      throw DimensionMismatch("superoperator term of dimension " + std::to_string(t.op.dim()) +
                              " in map of dimension " + std::to_string(dim_));
    }
  }
}

Superoperator Superoperator::identity(int dim) {
  return Superoperator(dim, {{1.0, ComplexMatrix::identity(dim)}});
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  if (rho.dim() != dim_) {
    throw DimensionMismatch("superoperator of dimension " + std::to_string(dim_) +
                            " applied to matrix of dimension " + std::to_string(rho.dim()));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& t : terms_) out.noalias() += t.weight * (t.op.data() * rho.data() * t.op.data().adjoint());
  return ComplexMatrix(std::move(out));
}

Superoperator Superoperator::scaled(double factor) const {
  Superoperator out = *this;
  for (auto& t : out.terms_) t.weight *= factor;
  return out;
}

Eigen::MatrixXcd Superoperator::matrix() const {
  const int n = dim_ * dim_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& t : terms_) {
    const ComplexMatrix conj(Eigen::MatrixXcd(t.op.data().conjugate()));
    m += t.weight * kron(conj, t.op).data();
  }
  return m;
}

Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("adding superoperators of different dimension");
  Superoperator out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

Superoperator compose(const Superoperator& outer, const Superoperator& inner) {
  if (outer.dim() != inner.dim()) throw DimensionMismatch("composing superoperators of different dimension");
  std::vector<ConjugationTerm> terms;
  terms.reserve(outer.terms().size() * inner.terms().size());
  for (const auto& o : outer.terms()) {
    for (const auto& i : inner.terms()) terms.push_back({o.weight * i.weight, o.op * i.op});
  }
  return Superoperator(outer.dim(), std::move(terms));
}

}  // namespace gpauli
