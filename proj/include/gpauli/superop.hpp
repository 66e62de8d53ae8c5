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

#include <vector>

#include <Eigen/Dense>

#include "gpauli/linalg.hpp"

namespace gpauli {

// weight * op * rho * op^dagger
struct ConjugationTerm {
  double weight = 1.0;
  ComplexMatrix op;
};

// Linear map on d x d matrices stored as a weighted sum of conjugations.
// Weights may be negative, so non-CP maps are representable.
class Superoperator {
 public:
  explicit Superoperator(int dim) : dim_(dim) {}
  Superoperator(int dim, std::vector<ConjugationTerm> terms);

  static Superoperator identity(int dim);

  int dim() const { return dim_; }
  const std::vector<ConjugationTerm>& terms() const { return terms_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix operator()(const ComplexMatrix& rho) const { return apply(rho); }

  Superoperator scaled(double factor) const;

  // d^2 x d^2 matrix acting on column-stacked vec(rho).
  Eigen::MatrixXcd matrix() const;

  friend Superoperator operator+(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator*(double s, const Superoperator& a) { return a.scaled(s); }

 private:
  int dim_;
  std::vector<ConjugationTerm> terms_;
};

// (outer o inner)[rho] = outer[inner[rho]]
Superoperator compose(const Superoperator& outer, const Superoperator& inner);

}  // namespace gpauli
