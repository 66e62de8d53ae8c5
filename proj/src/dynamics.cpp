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

#include "gpauli/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Absolute floor under the relative increase threshold: norms here are O(1)
// and below ~1e-13 a change is indistinguishable from rounding.
constexpr double kIncreaseFloor = 1e-13;

bool increased(double before, double after) {
  return after - before > kRelativeIncreaseThreshold * before + kIncreaseFloor;
}

double relative_increase(double before, double after) {
  return (after - before) / std::max(before, 1e-12);
}

struct PointResult {
  double margin = kNaN;  // NaN = not applicable
  int alpha = 0;
  int beta = 0;
};

template <typename F>
Verdict make_verdict(std::string criterion, const Trajectory& traj, F&& at_point) {
  Verdict v;
  v.criterion = std::move(criterion);
  v.margins.resize(traj.times.size(), kNaN);
  v.min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < traj.points(); ++i) {
    const PointResult r = at_point(i);
    v.margins[i] = r.margin;
    if (std::isnan(r.margin)) {
      v.not_applicable.push_back(i);
      continue;
    }
    v.min_margin = std::min(v.min_margin, r.margin);
    if (r.margin < -kConditionSlack) {
      v.violations.push_back({i, traj.times[i], r.alpha, r.beta, r.margin});
      if (!v.first_violation_time) v.first_violation_time = traj.times[i];
    }
  }
  if (!v.violations.empty()) {
    v.status = VerdictStatus::violated;
  } else if (!v.not_applicable.empty()) {
    v.status = VerdictStatus::not_applicable;
  } else {
    v.status = VerdictStatus::holds;
  }
  if (v.not_applicable.size() == v.margins.size()) v.min_margin = kNaN;
  return v;
}

double min_eigenvalue_of(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

std::vector<double> Trajectory::lambdas_at(int i) const {
  std::vector<double> out(rates());
  for (int a = 0; a < rates(); ++a) out[a] = lambdas(a, i);
  return out;
}

Trajectory build_trajectory(const RateSet& rates, double t_max, int steps, double tol) {
  if (!std::isfinite(t_max) || !(t_max > 0.0)) throw InvalidInput("t_max must be positive and finite");
  if (steps < 2) throw InvalidInput("steps must be >= 2, got " + std::to_string(steps));
  if (!(tol > 0.0)) throw InvalidInput("quadrature tolerance must be positive");

  const int n = rates.size();
  Trajectory traj;
  traj.dim = rates.dim();
  traj.label = rates.label();
  traj.times.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) traj.times[i] = t_max * i / steps;
  traj.gammas.resize(n, steps + 1);
  traj.integrated.resize(n, steps + 1);
  traj.lambdas.resize(n, steps + 1);

  const double sub_tol = tol / steps;
  for (int a = 1; a <= n; ++a) {
    const RateExpr& expr = rates.rate(a);
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double t = traj.times[i];
      try {
        traj.gammas(a - 1, i) = expr.evaluate(t);
        if (i > 0) acc += integrate(expr, traj.times[i - 1], t, sub_tol);
      } catch (const QuadratureError& e) {
        throw QuadratureError("rate gamma_" + std::to_string(a) + " on [" + format_double(i > 0 ? traj.times[i - 1] : t) +
                              ", " + format_double(t) + "]: " + e.what());
      } catch (const EvaluationError& e) {
        throw EvaluationError("rate gamma_" + std::to_string(a) + " near t = " + format_double(t) + ": " + e.what());
      }
      traj.integrated(a - 1, i) = acc;
    }
  }
  for (int i = 0; i <= steps; ++i) {
    for (int a = 0; a < n; ++a) {
      double others = 0.0;
      for (int b = 0; b < n; ++b) {
        if (b != a) others += traj.integrated(b, i);
      }
      traj.lambdas(a, i) = std::exp(-others);
    }
  }
  return traj;
}

std::vector<double> intermediate_eigenvalues(const Trajectory& traj, int from_index, int to_index) {
  if (from_index < 0 || to_index < from_index || to_index >= traj.points()) {
    throw IndexOutOfRange("intermediate map needs 0 <= s <= t < N+1");
  }
  std::vector<double> nu(traj.rates());
  for (int a = 0; a < traj.rates(); ++a) nu[a] = traj.lambdas(a, to_index) / traj.lambdas(a, from_index);
  return nu;
}

GenPauliChannel intermediate_map(const Trajectory& traj, std::shared_ptr<const MubFamily> family, int from_index,
                                 int to_index) {
  return channel_from_eigenvalues(std::move(family), intermediate_eigenvalues(traj, from_index, to_index));
}

ComplexMatrix evolve(const Trajectory& traj, const MubFamily& family, int index, const ComplexMatrix& x) {
  if (index < 0 || index >= traj.points()) throw IndexOutOfRange("grid index " + std::to_string(index));
  return spectral_apply(family, traj.lambdas_at(index), x);
}

ComplexMatrix generator_apply(const RateSet& rates, const MubFamily& family, double t, const ComplexMatrix& rho) {
  if (rates.dim() != family.dim()) throw DimensionMismatch("rate set and MUB family dimensions differ");
  if (rho.dim() != family.dim()) throw DimensionMismatch("generator_apply: matrix dimension mismatch");
  ComplexMatrix out(family.dim());
  for (int a = 1; a <= rates.size(); ++a) {
    out += rates.rate(a).evaluate(t) * (family.dephase(a, rho) - rho);
  }
  return out;
}

SpectralComponents::SpectralComponents(const MubFamily& family, const ComplexMatrix& x) : dim_(family.dim()) {
  if (x.dim() != dim_) throw DimensionMismatch("SpectralComponents: matrix dimension mismatch");
  mixed_ = (x.trace() / static_cast<double>(dim_)) * Eigen::MatrixXcd::Identity(dim_, dim_);
  for (int a = 1; a <= dim_ + 1; ++a) parts_.push_back(family.dephase(a, x).data() - mixed_);
}

ComplexMatrix SpectralComponents::combine(std::span<const double> lam) const {
  if (lam.size() != parts_.size()) throw InvalidInput("SpectralComponents: eigenvalue count mismatch");
  Eigen::MatrixXcd out = mixed_;
  for (std::size_t a = 0; a < parts_.size(); ++a) out += lam[a] * parts_[a];
  return ComplexMatrix(std::move(out));
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::holds:
      return "holds";
    case VerdictStatus::violated:
      return "violated";
    case VerdictStatus::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

bool Verdict::applicable_at(int i) const { return !std::isnan(margins.at(i)); }

bool Verdict::holds_at(int i) const { return applicable_at(i) && margins.at(i) >= -kConditionSlack; }

Verdict check_cptp_trajectory(const Trajectory& traj) {
  return make_verdict("cp_map_valid", traj, [&](int i) {
    const auto lam = traj.lambdas_at(i);
    const CpVerdict cp = fujiwara_check(traj.dim, lam);
    return PointResult{cp.margin, 0, 0};
  });
}

Verdict check_cp_divisible(const Trajectory& traj) {
  return make_verdict("cp_divisible", traj, [&](int i) {
    PointResult r{std::numeric_limits<double>::infinity(), 0, 0};
    for (int a = 1; a <= traj.rates(); ++a) {
      if (traj.gamma(a, i) < r.margin) r = {traj.gamma(a, i), a, 0};
    }
    return r;
  });
}

Verdict check_p_necessary(const Trajectory& traj) {
  return make_verdict("p_necessary", traj, [&](int i) {
    PointResult r{std::numeric_limits<double>::infinity(), 0, 0};
    for (int a = 1; a <= traj.rates(); ++a) {
      double others = 0.0;
      for (int b = 1; b <= traj.rates(); ++b) {
        if (b != a) others += traj.gamma(b, i);
      }
      if (others < r.margin) r = {others, a, 0};
    }
    return r;
  });
}

Verdict check_p_sufficient(const Trajectory& traj) {
  const double weight = traj.dim - 1;
  return make_verdict("p_sufficient", traj, [&](int i) {
    int negatives = 0;
    for (int a = 1; a <= traj.rates(); ++a) negatives += traj.gamma(a, i) < -kConditionSlack;
    if (negatives > 1) return PointResult{};
    PointResult r{std::numeric_limits<double>::infinity(), 0, 0};
    for (int a = 1; a <= traj.rates(); ++a) {
      for (int b = 1; b <= traj.rates(); ++b) {
        if (a == b) continue;
        const double m = traj.gamma(a, i) + weight * traj.gamma(b, i);
        if (m < r.margin) r = {m, a, b};
      }
    }
    return r;
  });
}

WeylRateSeries weyl_rates_from_trajectory(const Trajectory& traj) {
  const int d = traj.dim;
  const WeylBasis basis(d);
  const auto classes = commuting_classes(basis);
  WeylRateSeries s;
  s.dim = d;
  s.times = traj.times;
  s.rates.resize(d * d - 1, traj.points());
  for (int a = 1; a <= traj.rates(); ++a) {
    for (const auto& idx : classes[a - 1]) {
      const int row = idx.k + d * idx.l - 1;
      s.rates.row(row) = traj.gammas.row(a - 1) / static_cast<double>(d);
    }
  }
  return s;
}

Verdict check_weyl_sufficient(const WeylRateSeries& series) {
  const int d = series.dim;
  if (series.rates.rows() != d * d - 1 || series.rates.cols() != static_cast<Eigen::Index>(series.times.size())) {
    throw DimensionMismatch("Weyl rate series must be (d^2-1) x (number of grid points)");
  }
  Trajectory shape;
  shape.times = series.times;
  return make_verdict("weyl_sufficient", shape, [&](int i) {
    std::vector<double> col(series.rates.rows());
    for (Eigen::Index r = 0; r < series.rates.rows(); ++r) col[r] = series.rates(r, i);
    const int negatives =
        static_cast<int>(std::count_if(col.begin(), col.end(), [](double g) { return g < -kConditionSlack; }));
    if (negatives > d - 1) return PointResult{};
    std::vector<int> order(col.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return col[x] < col[y]; });
    double sum = 0.0;
    for (int j = 0; j < d; ++j) sum += col[order[j]];
    return PointResult{sum, order[0] + 1, order[d - 1] + 1};
  });
}

FrobeniusReport check_frobenius_monotone(const Trajectory& traj, const MubFamily& family, int random_samples,
                                         std::uint64_t seed) {
  if (traj.dim != family.dim()) throw DimensionMismatch("trajectory and MUB family dimensions differ");
  FrobeniusReport rep;
  rep.analytic = make_verdict("frobenius_monotone", traj, [&](int i) {
    PointResult r{std::numeric_limits<double>::infinity(), 0, 0};
    for (int a = 1; a <= traj.rates(); ++a) {
      const double m = -traj.mu(a, i) * traj.lambda(a, i);
      if (m < r.margin) r = {m, a, 0};
    }
    return r;
  });

  std::vector<std::pair<std::string, ComplexMatrix>> probes;
  for (int a = 1; a <= traj.rates(); ++a) {
    const ComplexMatrix& u = family.unitary(a);
    probes.emplace_back("U_" + std::to_string(a) + " + U_" + std::to_string(a) + "^dagger", u + u.adjoint());
  }
  RandomSource rng(seed);
  for (int n = 0; n < random_samples; ++n) probes.emplace_back("random #" + std::to_string(n), rng.hermitian(traj.dim));
  rep.samples = static_cast<int>(probes.size());

  for (const auto& [name, x] : probes) {
    const SpectralComponents comp(family, x);
    double prev = frobenius_norm(comp.combine(traj.lambdas_at(0)));
    for (int i = 1; i < traj.points(); ++i) {
      const double cur = frobenius_norm(comp.combine(traj.lambdas_at(i)));
      const double rel = relative_increase(prev, cur);
      if (increased(prev, cur) && (!rep.increase_found || rel > rep.max_relative_increase)) {
        rep.increase_found = true;
        rep.max_relative_increase = rel;
        rep.increase_index = i - 1;
        rep.increase_operator = name;
      } else if (!rep.increase_found) {
        rep.max_relative_increase = std::max(rep.max_relative_increase, rel);
      }
      prev = cur;
    }
  }
  return rep;
}

namespace {

struct Candidate {
  double score = std::numeric_limits<double>::infinity();  // min eigenvalue; lower is better
  int pair = -1;
  ComplexVector psi;
};

class WitnessSearcher {
 public:
  WitnessSearcher(const Trajectory& traj, const MubFamily& family, const WitnessOptions& opt)
      : traj_(traj), family_(family), opt_(opt), rng_(opt.seed) {
    const int n = traj.points() - 1;
    for (int i = 0; i < n; ++i) pairs_.emplace_back(i, i + 1);
    const int coarse = std::min(n, 24);
    std::vector<int> marks;
    for (int k = 0; k <= coarse; ++k) marks.push_back(static_cast<int>(std::lround(static_cast<double>(k) * n / coarse)));
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (std::size_t a = 0; a < marks.size(); ++a) {
      for (std::size_t b = a + 1; b < marks.size(); ++b) {
        if (marks[b] > marks[a] + 1) pairs_.emplace_back(marks[a], marks[b]);
      }
    }
    for (const auto& [s, t] : pairs_) nus_.push_back(intermediate_eigenvalues(traj, s, t));
  }

  double evaluate(int pair, const ComplexVector& psi) {
    ++evaluations_;
    const SpectralComponents comp(family_, ComplexMatrix::projector(psi));
    return min_eigenvalue_of(comp.combine(nus_[pair]).data());
  }

  WitnessSearch run() {
    WitnessSearch out;
    out.candidate_pairs = static_cast<int>(pairs_.size());
    if (pairs_.empty()) return out;

    // Screen every candidate pair with the MUB vectors; these expose any
    // eigenvalue ratio nu_a > 1 or nu_a < -1/(d-1) directly.
    std::vector<double> pair_score(pairs_.size(), std::numeric_limits<double>::infinity());
    std::vector<SpectralComponents> probes;
    std::vector<ComplexVector> probe_states;
    for (int a = 1; a <= family_.size(); ++a) {
      for (const auto& v : family_.basis(a)) {
        probes.emplace_back(family_, ComplexMatrix::projector(v));
        probe_states.push_back(v);
      }
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      for (std::size_t q = 0; q < probes.size(); ++q) {
        ++evaluations_;
        const double score = min_eigenvalue_of(probes[q].combine(nus_[p]).data());
        if (score < pair_score[p]) pair_score[p] = score;
        offer({score, static_cast<int>(p), probe_states[q]});
      }
    }
    std::vector<int> ranked(pairs_.size());
    std::iota(ranked.begin(), ranked.end(), 0);
    std::stable_sort(ranked.begin(), ranked.end(), [&](int x, int y) { return pair_score[x] < pair_score[y]; });
    const int top = std::min<int>(32, static_cast<int>(ranked.size()));

    for (int attempt = 0; attempt < opt_.attempts; ++attempt) {
      const int pair = attempt % 2 == 0 ? ranked[rng_.uniform_int(0, top - 1)]
                                        : rng_.uniform_int(0, static_cast<int>(pairs_.size()) - 1);
      ComplexVector psi = rng_.pure_state(traj_.dim);
      offer({evaluate(pair, psi), pair, std::move(psi)});
    }

    Candidate best;
    for (auto c : best_) {
      refine(c);
      if (c.score < best.score) best = c;
    }
    out.evaluations = evaluations_;
    out.best_min_eigenvalue = best.score;
    if (best.score < -kWitnessThreshold) {
      PositivityWitness w;
      w.from_index = pairs_[best.pair].first;
      w.to_index = pairs_[best.pair].second;
      w.s = traj_.times[w.from_index];
      w.t = traj_.times[w.to_index];
      w.state = best.psi;
      w.min_eigenvalue = best.score;
      const SpectralComponents comp(family_, ComplexMatrix::projector(best.psi));
      w.trace_norm = trace_norm(comp.combine(nus_[best.pair]));
      out.witness = std::move(w);
    }
    return out;
  }

 private:
  // Keeps the refine_candidates lowest scores, at most one entry per pair.
  void offer(Candidate c) {
    for (auto& b : best_) {
      if (b.pair == c.pair) {
        if (c.score < b.score) b = std::move(c);
        return;
      }
    }
    if (static_cast<int>(best_.size()) < std::max(1, opt_.refine_candidates)) {
      best_.push_back(std::move(c));
      return;
    }
    auto worst = std::max_element(best_.begin(), best_.end(),
                                  [](const Candidate& x, const Candidate& y) { return x.score < y.score; });
    if (c.score < worst->score) *worst = std::move(c);
  }

  // Gradient-free coordinate polish over the real and imaginary parts of psi.
  void refine(Candidate& c) {
    const int d = traj_.dim;
    double step = 0.2;
    for (int it = 0; it < opt_.refine_iters; ++it) {
      bool improved = false;
      for (int coord = 0; coord < 2 * d; ++coord) {
        for (double sign : {1.0, -1.0}) {
          ComplexVector trial = c.psi;
          const Complex delta = coord < d ? Complex(sign * step, 0.0) : Complex(0.0, sign * step);
          trial(coord % d) += delta;
          const double norm = trial.norm();
          if (norm < 1e-12) continue;
          trial /= norm;
          const double score = evaluate(c.pair, trial);
          if (score < c.score) {
            c.score = score;
            c.psi = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  const Trajectory& traj_;
  const MubFamily& family_;
  WitnessOptions opt_;
  RandomSource rng_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<double>> nus_;
  std::vector<Candidate> best_;
  long evaluations_ = 0;
};

}  // namespace

WitnessSearch find_p_divisibility_witness(const Trajectory& traj, const MubFamily& family,
                                          const WitnessOptions& options) {
  if (traj.dim != family.dim()) throw DimensionMismatch("trajectory and MUB family dimensions differ");
  if (options.attempts < 0 || options.refine_iters < 0) throw InvalidInput("witness budget must be nonnegative");
  WitnessSearcher searcher(traj, family, options);
  return searcher.run();
}

BlpReport check_blp(const Trajectory& traj, const MubFamily& family, int random_pairs, std::uint64_t seed) {
  if (traj.dim != family.dim()) throw DimensionMismatch("trajectory and MUB family dimensions differ");
  std::vector<std::pair<ComplexVector, ComplexVector>> pairs;
  for (int a = 1; a <= family.size(); ++a) pairs.emplace_back(family.vector(a, 0), family.vector(a, 1));
  RandomSource rng(seed);
  for (int n = 0; n < random_pairs; ++n) {
    ComplexVector v1 = rng.pure_state(traj.dim);
    ComplexVector v2 = rng.pure_state(traj.dim);
    pairs.emplace_back(std::move(v1), std::move(v2));
  }

  BlpReport rep;
  rep.pairs = static_cast<int>(pairs.size());
  for (const auto& [v1, v2] : pairs) {
    const SpectralComponents comp(family, ComplexMatrix::projector(v1) - ComplexMatrix::projector(v2));
    double prev = trace_norm(comp.combine(traj.lambdas_at(0)));
    for (int i = 1; i < traj.points(); ++i) {
      const double cur = trace_norm(comp.combine(traj.lambdas_at(i)));
      const double rel = relative_increase(prev, cur);
      if (increased(prev, cur) && (!rep.increase_found || rel > rep.max_relative_increase)) {
        rep.increase_found = true;
        rep.max_relative_increase = rel;
        rep.witness = BlpWitness{i - 1, traj.times[i - 1], traj.times[i], v1, v2, prev, cur};
      } else if (!rep.increase_found) {
        rep.max_relative_increase = std::max(rep.max_relative_increase, rel);
      }
      prev = cur;
    }
  }
  return rep;
}

std::vector<std::string> check_hierarchy(const DivisibilityReport& r) {
  std::vector<std::string> out;
  auto fail = [&out](const std::string& msg) { out.push_back(msg); };
  const int n = static_cast<int>(r.cp_divisible.margins.size());

  for (int i = 0; i < n; ++i) {
    if (r.cp_divisible.holds_at(i) && !r.p_sufficient.holds_at(i)) {
      fail("grid point " + std::to_string(i) + ": CP-divisible rates but sufficient condition not met");
    }
    if (r.p_sufficient.holds_at(i) && !r.p_necessary.holds_at(i)) {
      fail("grid point " + std::to_string(i) + ": sufficient condition holds but necessary condition fails");
    }
    const double sm = r.p_sufficient.margins[i];
    const double wm = r.weyl_sufficient.margins[i];
    if (r.p_sufficient.applicable_at(i) != r.weyl_sufficient.applicable_at(i)) {
      fail("grid point " + std::to_string(i) + ": Weyl and class sufficient conditions disagree on applicability");
    } else if (r.p_sufficient.applicable_at(i) && std::abs(sm) > 1e-9 && std::abs(wm) > 1e-9 &&
               (sm < 0) != (wm < 0)) {
      fail("grid point " + std::to_string(i) + ": Weyl and class sufficient conditions disagree");
    }
  }
  if (r.cp_divisible.holds() && !r.cp_map_valid.holds()) fail("CP-divisible rates but map not CPTP");
  if (r.cp_divisible.holds() && !r.p_sufficient.holds()) fail("CP-divisible rates but sufficient condition not met");
  if (r.p_sufficient.holds() && !r.p_necessary.holds()) fail("sufficient condition holds but necessary fails");
  if (r.p_sufficient.holds() && r.trace_norm_witness.found()) {
    fail("sufficient condition holds everywhere but a positivity witness was found");
  }
  if (r.p_sufficient.holds() && r.blp_witness.increase_found) {
    fail("sufficient condition holds everywhere but trace distance increased");
  }
  if (r.p_necessary.holds() != r.frobenius_monotone.analytic.holds()) {
    fail("necessary condition and Frobenius monotonicity disagree");
  }
  if (r.p_necessary.holds() && r.frobenius_monotone.increase_found) {
    fail("necessary condition holds but a Frobenius norm increased");
  }
  return out;
}

DivisibilityReport analyze_trajectory(const Trajectory& traj, const MubFamily& family, const AnalysisOptions& opt) {
  if (traj.dim != family.dim()) throw DimensionMismatch("trajectory and MUB family dimensions differ");
  DivisibilityReport r;
  r.label = traj.label;
  r.dim = traj.dim;
  r.t_max = traj.times.back();
  r.steps = traj.points() - 1;
  r.seed = opt.seed;
  for (int i = 0; i < traj.points(); ++i) {
    int neg = 0;
    for (int a = 1; a <= traj.rates(); ++a) neg += traj.gamma(a, i) < -kConditionSlack;
    r.negative_rates.push_back(neg);
  }
  r.cp_map_valid = check_cptp_trajectory(traj);
  r.cp_divisible = check_cp_divisible(traj);
  r.p_necessary = check_p_necessary(traj);
  r.p_sufficient = check_p_sufficient(traj);
  r.weyl_sufficient = check_weyl_sufficient(weyl_rates_from_trajectory(traj));
  r.frobenius_monotone = check_frobenius_monotone(traj, family, opt.frobenius_samples, opt.seed);
  WitnessOptions w = opt.witness;
  w.seed = opt.seed;
  r.trace_norm_witness = find_p_divisibility_witness(traj, family, w);
  r.blp_witness = check_blp(traj, family, opt.blp_pairs, opt.seed);
  r.hierarchy_violations = check_hierarchy(r);
  return r;
}

Analysis analyze(const RateSet& rates, const MubFamily& family, const AnalysisOptions& opt) {
  if (rates.dim() != family.dim()) throw DimensionMismatch("rate set and MUB family dimensions differ");
  Trajectory traj = build_trajectory(rates, opt.t_max, opt.steps, opt.quadrature_tol);
  DivisibilityReport report = analyze_trajectory(traj, family, opt);
  return {std::move(traj), std::move(report)};
}

}  // namespace gpauli
