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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gpauli/channel.hpp"
#include "gpauli/linalg.hpp"
#include "gpauli/mub.hpp"
#include "gpauli/ratefn.hpp"

namespace gpauli {

// Rates, integrated rates and map eigenvalues sampled on a uniform grid.
// Matrices are (d+1) x (N+1); row a-1 holds basis index a.
struct Trajectory {
  int dim = 0;
  std::string label;
  std::vector<double> times;
  Eigen::MatrixXd gammas;      // gamma_a(t_i)
  Eigen::MatrixXd integrated;  // Gamma_a(t_i) = int_0^t_i gamma_a
  Eigen::MatrixXd lambdas;     // exp(Gamma_a - Gamma)

  int points() const { return static_cast<int>(times.size()); }
  int rates() const { return dim + 1; }
  double gamma(int alpha, int i) const { return gammas(alpha - 1, i); }
  double lambda(int alpha, int i) const { return lambdas(alpha - 1, i); }
  double total_rate(int i) const { return gammas.col(i).sum(); }
  // mu_a = gamma_a - gamma, the generator eigenvalue on U_a^k
  double mu(int alpha, int i) const { return gamma(alpha, i) - total_rate(i); }
  std::vector<double> lambdas_at(int i) const;
};

inline constexpr int kDefaultSteps = 400;

// Gamma is accumulated subinterval by subinterval; each subinterval gets
// tol / steps of the quadrature budget. Throws QuadratureError / EvaluationError
// naming the offending rate and interval.
Trajectory build_trajectory(const RateSet& rates, double t_max, int steps = kDefaultSteps,
                            double tol = kDefaultQuadratureTol);

// nu_a(t_j, t_i) = lambda_a(t_j) / lambda_a(t_i): eigenvalues of V(t_j, t_i).
std::vector<double> intermediate_eigenvalues(const Trajectory& traj, int from_index, int to_index);
GenPauliChannel intermediate_map(const Trajectory& traj, std::shared_ptr<const MubFamily> family,
                                 int from_index, int to_index);

// Lambda(t_i)[x] through the spectral form.
ComplexMatrix evolve(const Trajectory& traj, const MubFamily& family, int index, const ComplexMatrix& x);

// L(t)[rho] = sum_a gamma_a(t) (Phi_a[rho] - rho)
ComplexMatrix generator_apply(const RateSet& rates, const MubFamily& family, double t, const ComplexMatrix& rho);

// Decomposition x = Tr(x) I/d + sum_a C_a with C_a = Phi_a[x] - Tr(x) I/d, so
// that any generalized Pauli map with eigenvalues lam acts as
// Tr(x) I/d + sum_a lam_a C_a.
class SpectralComponents {
 public:
  SpectralComponents(const MubFamily& family, const ComplexMatrix& x);
  ComplexMatrix combine(std::span<const double> lam) const;

 private:
  int dim_;
  Eigen::MatrixXcd mixed_;
  std::vector<Eigen::MatrixXcd> parts_;
};

inline constexpr double kConditionSlack = 1e-12;
inline constexpr double kWitnessThreshold = 1e-9;
inline constexpr double kRelativeIncreaseThreshold = 1e-9;

enum class VerdictStatus { holds, violated, not_applicable };

const char* to_string(VerdictStatus status);

struct ConditionViolation {
  int index = 0;
  double t = 0.0;
  int alpha = 0;  // worst offending index (0 when not meaningful)
  int beta = 0;   // partner index for pairwise conditions
  double margin = 0.0;
};

// Per-grid verdict of one condition. margins[i] is the signed slack at t_i
// (negative = violated); NaN where the condition is not applicable.
struct Verdict {
  std::string criterion;
  VerdictStatus status = VerdictStatus::holds;
  std::vector<double> margins;
  std::vector<ConditionViolation> violations;
  std::vector<int> not_applicable;
  double min_margin = 0.0;
  std::optional<double> first_violation_time;

  bool holds() const { return status == VerdictStatus::holds; }
  bool violated() const { return status == VerdictStatus::violated; }
  bool holds_at(int i) const;
  bool applicable_at(int i) const;
};

// Fujiwara-type bound on lambda(t): sum e^Gamma_a <= e^Gamma + d min e^Gamma_a.
Verdict check_cptp_trajectory(const Trajectory& traj);
// min_a gamma_a(t) >= 0
Verdict check_cp_divisible(const Trajectory& traj);
// sum_{b != a} gamma_b(t) >= 0 for every a
Verdict check_p_necessary(const Trajectory& traj);
// gamma_a + (d-1) gamma_b >= 0 for a != b; not applicable where more than one rate is negative
Verdict check_p_sufficient(const Trajectory& traj);

// Rates of the Weyl generator sum_kl gamma_kl (W_kl rho W_kl^dagger - rho), one row
// per nontrivial W_kl ordered by index k + d l (row = index - 1).
struct WeylRateSeries {
  int dim = 0;
  std::vector<double> times;
  Eigen::MatrixXd rates;  // (d^2 - 1) x (N+1)
};

// Class-constant expansion of a generalized Pauli generator: gamma_kl = gamma_a / d.
WeylRateSeries weyl_rates_from_trajectory(const Trajectory& traj);

// Every sum of d Weyl rates is nonnegative; not applicable where more than d-1
// Weyl rates are negative.
Verdict check_weyl_sufficient(const WeylRateSeries& series);

struct FrobeniusReport {
  Verdict analytic;  // d/dt lambda_a^2 <= 0 from the sign of mu_a
  int samples = 0;
  double max_relative_increase = 0.0;
  bool increase_found = false;
  // Where the largest increase was seen.
  int increase_index = -1;
  std::string increase_operator;  // "U_a + U_a^dagger" or "random #n"
};

// Analytic check plus a numerical sweep of ||Lambda(t_i)[X]||_2 for seeded random
// Hermitian X and X = U_a + U_a^dagger.
FrobeniusReport check_frobenius_monotone(const Trajectory& traj, const MubFamily& family, int random_samples = 16,
                                         std::uint64_t seed = 42);

struct PositivityWitness {
  int from_index = 0;  // s
  int to_index = 0;    // t > s
  double s = 0.0;
  double t = 0.0;
  ComplexVector state;       // |psi>
  double min_eigenvalue = 0.0;  // of V(t,s)[|psi><psi|]
  double trace_norm = 0.0;      // ||V(t,s)[|psi><psi|]||_1 (input has norm 1)
  double violation() const { return -min_eigenvalue; }
};

struct WitnessOptions {
  int attempts = 2000;
  int refine_iters = 50;
  int refine_candidates = 4;
  std::uint64_t seed = 42;
};

struct WitnessSearch {
  std::optional<PositivityWitness> witness;
  long evaluations = 0;
  int candidate_pairs = 0;
  double best_min_eigenvalue = 0.0;
  bool found() const { return witness.has_value(); }
};

// Searches pairs of grid times and pure states for a negative eigenvalue of
// V(t,s)[|psi><psi|]. A found witness proves the map is not P-divisible; an
// empty result is inconclusive.
WitnessSearch find_p_divisibility_witness(const Trajectory& traj, const MubFamily& family,
                                          const WitnessOptions& options = {});

struct BlpWitness {
  int index = 0;  // increase from t_index to t_{index+1}
  double t_before = 0.0;
  double t_after = 0.0;
  ComplexVector state1;
  ComplexVector state2;
  double norm_before = 0.0;
  double norm_after = 0.0;
};

struct BlpReport {
  int pairs = 0;
  bool increase_found = false;
  double max_relative_increase = 0.0;
  std::optional<BlpWitness> witness;
};

// Trace distance of sampled pure-state pairs along the grid. Pairs: the first two
// vectors of each MUB basis, then `random_pairs` seeded Haar-random pairs.
BlpReport check_blp(const Trajectory& traj, const MubFamily& family, int random_pairs = 48,
                    std::uint64_t seed = 42);

struct AnalysisOptions {
  double t_max = 5.0;
  int steps = kDefaultSteps;
  double quadrature_tol = kDefaultQuadratureTol;
  std::uint64_t seed = 42;
  WitnessOptions witness{};
  int blp_pairs = 48;
  int frobenius_samples = 16;
};

struct DivisibilityReport {
  std::string label;
  int dim = 0;
  double t_max = 0.0;
  int steps = 0;
  std::uint64_t seed = 0;
  std::vector<int> negative_rates;  // count of gamma_a < 0 per grid point
  Verdict cp_map_valid;
  Verdict cp_divisible;
  Verdict p_necessary;
  Verdict p_sufficient;
  Verdict weyl_sufficient;
  FrobeniusReport frobenius_monotone;
  WitnessSearch trace_norm_witness;
  BlpReport blp_witness;
  std::vector<std::string> hierarchy_violations;
};

struct Analysis {
  Trajectory trajectory;
  DivisibilityReport report;
};

DivisibilityReport analyze_trajectory(const Trajectory& traj, const MubFamily& family,
                                      const AnalysisOptions& options = {});
Analysis analyze(const RateSet& rates, const MubFamily& family, const AnalysisOptions& options = {});

// Logical cross-checks between verdicts; returns one message per broken implication.
std::vector<std::string> check_hierarchy(const DivisibilityReport& report);

}  // namespace gpauli
