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

#include <doctest.h>

#include <cmath>
#include <memory>
#include <numeric>

#include "gpauli/channel.hpp"
#include "gpauli/errors.hpp"
#include "test_support.hpp"

using namespace gpauli;
using gpauli::testing::basis_of_pauli;
using gpauli::testing::pauli;

namespace {

std::shared_ptr<const MubFamily> family(int d) { return std::make_shared<const MubFamily>(mub_family(d)); }

std::vector<double> random_probabilities(RandomSource& rng, int d, bool signed_entries = false) {
  std::vector<double> p(d + 2);
  double total = 0.0;
  for (auto& x : p) {
    x = signed_entries ? rng.uniform(-0.5, 1.0) : -std::log(rng.uniform(1e-12, 1.0));
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

// Eigenvalue read off from the Kraus action: Tr(U^dagger Lambda[U]) / d.
double kraus_eigenvalue(const GenPauliChannel& ch, int alpha, int k) {
  const ComplexMatrix u = ch.family().unitary_power(alpha, k);
  return std::real(hs_inner(u, ch.apply(u))) / ch.dim();
}

}  // namespace

TEST_CASE("eigenvalues from probabilities") {
  for (int d : {2, 3, 5}) {
    std::vector<double> p(d + 2, 0.0);
    p[0] = 1.0;
    auto ch = channel_from_probabilities(family(d), p);
    for (int a = 1; a <= d + 1; ++a) CHECK(ch.lambda(a) == doctest::Approx(1.0));
    CHECK(ch.lambda(0) == 1.0);
  }
  auto depol = channel_from_probabilities(family(2), {0.25, 0.25, 0.25, 0.25});
  for (double l : depol.eigenvalues()) CHECK(std::abs(l) < 1e-15);

  // lambda_1 = 0 + 1 - 0 = 1, lambda_b = 0 + 0 - 1/2 for b != 1
  auto ch = channel_from_probabilities(family(3), {0, 1, 0, 0, 0});
  const std::vector<double> expected{1.0, -0.5, -0.5, -0.5};
  for (int a = 1; a <= 4; ++a) {
    CHECK(ch.lambda(a) == doctest::Approx(expected[a - 1]).epsilon(1e-14));
    for (int k = 1; k < 3; ++k) CHECK(kraus_eigenvalue(ch, a, k) == doctest::Approx(expected[a - 1]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(channel_from_probabilities(family(3), {1, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(channel_from_probabilities(family(2), {1, 0, 0, NAN}), InvalidInput);
  CHECK_THROWS_AS(ch.lambda(5), IndexOutOfRange);
}

TEST_CASE("probabilities from eigenvalues") {
  for (int d : {2, 3, 5, 7}) {
    auto zero = channel_from_eigenvalues(family(d), std::vector<double>(d + 1, 0.0));
    CHECK(zero.probabilities()[0] == doctest::Approx(1.0 / (d * d)));
    for (int a = 1; a <= d + 1; ++a) CHECK(zero.probabilities()[a] == doctest::Approx((d - 1.0) / (d * d)));
    auto id = channel_from_eigenvalues(family(d), std::vector<double>(d + 1, 1.0));
    CHECK(id.probabilities()[0] == doctest::Approx(1.0));
    for (int a = 1; a <= d + 1; ++a) CHECK(std::abs(id.probabilities()[a]) < 1e-15);
  }
  // lambda = (1, -1, -1) in the textbook sigma ordering is conjugation by sigma_1.
  const auto fam = family(2);
  std::vector<double> lam(3);
  lam[basis_of_pauli(1) - 1] = 1.0;
  lam[basis_of_pauli(2) - 1] = -1.0;
  lam[basis_of_pauli(3) - 1] = -1.0;
  auto ch = channel_from_eigenvalues(fam, lam);
  CHECK(ch.probabilities()[0] == doctest::Approx(0.0));
  CHECK(ch.probabilities()[basis_of_pauli(1)] == doctest::Approx(1.0));
  RandomSource rng(5);
  const ComplexMatrix rho = rng.density_matrix(2);
  CHECK(ch.apply(rho).approx_equal(pauli(1) * rho * pauli(1), 1e-12));
}

TEST_CASE("p -> lambda -> p round trip") {
  RandomSource rng(21);
  for (int d : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = random_probabilities(rng, d, trial % 2 == 1);
      const auto lam = eigenvalues_from_probabilities(d, p);
      const auto back = probabilities_from_eigenvalues(d, lam);
      for (int a = 0; a <= d + 1; ++a) CHECK(std::abs(back[a] - p[a]) <= 1e-12);
    }
  }
}

TEST_CASE("Fujiwara check on hand-evaluated cases") {
  CHECK_FALSE(fujiwara_check(2, std::vector<double>{1, 1, -1}).cp);
  CHECK(fujiwara_check(2, std::vector<double>{1, 1, -1}).upper_slack == doctest::Approx(-2.0));
  const auto ones = fujiwara_check(3, std::vector<double>{1, 1, 1, 1});
  CHECK(ones.cp);
  CHECK(ones.lower_slack == doctest::Approx(4.5));
  CHECK(ones.upper_slack == doctest::Approx(0.0));
  const auto edge = fujiwara_check(2, std::vector<double>{1, -1, -1});
  CHECK(edge.cp);
  CHECK(std::abs(edge.margin) < 1e-15);
  CHECK(std::abs(edge.lower_slack) < 1e-15);
}

TEST_CASE("Fujiwara verdict agrees with the Choi matrix") {
  RandomSource rng(31);
  for (int d : {2, 3, 5}) {
    CAPTURE(d);
    const auto fam = family(d);
    int compared = 0;
    int cp_count = 0;
    while (compared < 150) {
      std::vector<double> lam(d + 1);
      if (compared % 2 == 0) {
        for (auto& x : lam) x = rng.uniform(-1.2, 1.2);
      } else {
        // Nonnegative p nudged across the boundary along one coordinate.
        auto p = random_probabilities(rng, d);
        const int k = rng.uniform_int(1, d + 1);
        const double u = rng.uniform(-0.05, 0.05);
        p[k] -= u;
        p[0] += u;
        lam = eigenvalues_from_probabilities(d, p);
      }
      const auto ch = channel_from_eigenvalues(fam, lam);
      if (std::abs(ch.cp_verdict().margin) < 1e-8) continue;
      ++compared;
      const bool choi = choi_matrix(ch).is_cp();
      CHECK(choi == ch.cp_flag());
      cp_count += choi;
      // The CP region coincides with nonnegative probabilities.
      const auto& p = ch.probabilities();
      CHECK(ch.cp_flag() == (*std::min_element(p.begin(), p.end()) >= -1e-12));
    }
    CHECK(cp_count > 20);
    CHECK(cp_count < compared - 20);
  }
}

TEST_CASE("Fujiwara-Algoet inequalities match the d = 2 bounds") {
  // The absolute values on 1 +- lambda_3 make the two forms agree only while
  // |lambda_3| <= 1, which holds for every positive trace-preserving map.
  RandomSource rng(41);
  int compared = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> lam{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    // |1 +- l3| >= |l1 +- l2| written out by hand
    const double s = std::min({std::abs(1 + lam[2]) - std::abs(lam[0] + lam[1]),
                               std::abs(1 - lam[2]) - std::abs(lam[0] - lam[1])});
    if (std::abs(s) < 1e-8) continue;
    const bool fa = s >= 0.0;
    CHECK(fa == fujiwara_check(2, lam).cp);
    CHECK(fa == fujiwara_algoet_qubit(lam));
    ++compared;
  }
  CHECK(compared > 1900);

  // Outside the unit cube the literal form accepts a map the Choi matrix rejects.
  const std::vector<double> outside{0.0, 0.0, 1.2};
  CHECK(fujiwara_algoet_qubit(outside));
  CHECK_FALSE(fujiwara_check(2, outside).cp);
  CHECK_FALSE(choi_matrix(channel_from_eigenvalues(family(2), outside)).is_cp());
}

TEST_CASE("Choi matrices of reference channels") {
  for (int d : {2, 3}) {
    const auto fam = family(d);
    const auto id = choi_matrix(channel_from_eigenvalues(fam, std::vector<double>(d + 1, 1.0)));
    const auto ev = eigenvalues_hermitian(id.matrix);
    CHECK(ev.back() == doctest::Approx(1.0));
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-12);
    CHECK(id.input_marginal().approx_equal(Complex(1.0 / d) * ComplexMatrix::identity(d), 1e-12));

    const auto dep = choi_matrix(channel_from_eigenvalues(fam, std::vector<double>(d + 1, 0.0)));
    CHECK(dep.matrix.approx_equal(Complex(1.0 / (d * d)) * ComplexMatrix::identity(d * d), 1e-12));
  }
  // Eternal qubit map at t = 1.
  const double e2 = std::exp(-2.0);
  const auto eternal = channel_from_eigenvalues(family(2), {(1 + e2) / 2, (1 + e2) / 2, e2});
  CHECK(eternal.cp_flag());
  CHECK(choi_matrix(eternal).min_eigenvalue() >= -1e-12);
  CHECK(choi_matrix(eternal).is_cp());
}

TEST_CASE("channel action") {
  RandomSource rng(51);
  for (int d : {2, 3, 5}) {
    CAPTURE(d);
    const auto fam = family(d);
    for (int trial = 0; trial < 20; ++trial) {
      // Real, possibly negative probabilities.
      const auto ch = channel_from_probabilities(fam, random_probabilities(rng, d, trial % 2 == 0));
      const ComplexMatrix a = rng.ginibre(d);
      const ComplexMatrix b = rng.hermitian(d);
      const Complex s(rng.normal(), rng.normal());
      CHECK(ch.apply(a + s * b).approx_equal(ch.apply(a) + s * ch.apply(b), 1e-11));
      CHECK(std::abs(ch.apply(a).trace() - a.trace()) < 1e-11);
      CHECK(ch.apply(ComplexMatrix::identity(d)).approx_equal(ComplexMatrix::identity(d), 1e-12));
      CHECK(check_hermitian(ch.apply(b), 1e-12).is_hermitian);
      CHECK(ch.apply(a).approx_equal(ch.apply_spectral(a), 1e-11));
      for (int al = 1; al <= d + 1; ++al) {
        for (int k = 1; k < d; ++k) {
          const ComplexMatrix u = fam->unitary_power(al, k);
          CHECK(ch.apply(u).approx_equal(Complex(ch.lambda(al)) * u, 1e-11));
        }
      }
    }
    const ComplexMatrix rho = rng.density_matrix(d);
    std::vector<double> p(d + 2, 0.0);
    p[0] = 1.0;
    CHECK(channel_from_probabilities(fam, p).apply(rho).approx_equal(rho, 1e-12));
    CHECK(channel_from_eigenvalues(fam, std::vector<double>(d + 1, 0.0))
              .apply(rho)
              .approx_equal(Complex(1.0 / d) * ComplexMatrix::identity(d), 1e-12));
    CHECK_THROWS_AS(channel_from_probabilities(fam, p).apply(ComplexMatrix::identity(d + 1)), DimensionMismatch);
  }
}

TEST_CASE("Weyl channels") {
  RandomSource rng(61);
  for (int d : {2, 3, 5}) {
    auto basis = std::make_shared<const WeylBasis>(d);
    const ComplexMatrix rho = rng.density_matrix(d);
    const WeylChannel uniform(basis, Eigen::MatrixXd::Constant(d, d, 1.0 / (d * d)));
    CHECK(weyl_channel_apply(uniform, rho).approx_equal(Complex(1.0 / d) * ComplexMatrix::identity(d), 1e-12));
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
    w(0, 0) = 1.0;
    CHECK(weyl_channel_apply(WeylChannel(basis, w), rho).approx_equal(rho, 1e-12));
  }
  for (int d : {3, 5}) {
    const auto fam = family(d);
    for (int trial = 0; trial < 10; ++trial) {
      const auto ch = channel_from_probabilities(fam, random_probabilities(rng, d));
      const auto wc = weyl_channel_from_pauli(ch);
      CHECK(std::abs(wc.weights().sum() - 1.0) < 1e-12);
      const ComplexMatrix rho = rng.density_matrix(d);
      CHECK(weyl_channel_apply(wc, rho).approx_equal(ch.apply(rho), 1e-12));
    }
  }
  auto basis = std::make_shared<const WeylBasis>(3);
  CHECK_THROWS_AS(WeylChannel(basis, Eigen::MatrixXd::Zero(2, 2)), DimensionMismatch);
}
