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

#include "gpauli/io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

using json = Json;

json complex_vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

ComplexVector complex_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("complex vector must be a JSON array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidInput("complex entries must be [re, im] pairs");
    }
    v(static_cast<Eigen::Index>(i)) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

json mub_family_to_json(const MubFamily& family) {
  json bases = json::array();
  for (int a = 1; a <= family.size(); ++a) {
    json vectors = json::array();
    for (const auto& v : family.basis(a)) vectors.push_back(complex_vector_to_json(v));
    bases.push_back({{"index", a}, {"generator", family.generator_label(a)}, {"vectors", std::move(vectors)}});
  }
  return {
      {"dim", family.dim()},
      {"convention",
       "basis 1 = eigenbasis of Z, basis k+2 = eigenbasis of X Z^k; vectors ordered by eigenvalue phase; "
       "first nonzero amplitude real positive"},
      {"bases", std::move(bases)},
  };
}

std::string overlaps_to_csv(const MubFamily& family) {
  std::ostringstream out;
  out << "alpha,k,beta,l,overlap,deviation\n";
  const double target = 1.0 / family.dim();
  for (const auto& r : cross_overlaps(family)) {
    out << r.alpha << ',' << r.k << ',' << r.beta << ',' << r.l << ',' << format_csv_double(r.overlap) << ','
        << format_csv_double(std::abs(r.overlap - target)) << '\n';
  }
  return out.str();
}

json overlaps_to_json(const MubFamily& family) {
  json rows = json::array();
  const double target = 1.0 / family.dim();
  for (const auto& r : cross_overlaps(family)) {
    rows.push_back({{"alpha", r.alpha},
                    {"k", r.k},
                    {"beta", r.beta},
                    {"l", r.l},
                    {"overlap", r.overlap},
                    {"deviation", std::abs(r.overlap - target)}});
  }
  return rows;
}

json channel_to_json(const GenPauliChannel& channel) {
  return {
      {"dim", channel.dim()},
      {"probabilities", channel.probabilities()},
      {"eigenvalues", channel.eigenvalues()},
      {"cp_flag", channel.cp_flag()},
      {"cp_margin", channel.cp_verdict().margin},
  };
}

GenPauliChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw InvalidInput("channel JSON needs an integer \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  auto family = std::make_shared<const MubFamily>(mub_family(dim));
  auto read = [&](const char* key) {
    if (!j[key].is_array()) throw InvalidInput(std::string("channel JSON: \"") + key + "\" must be an array");
    std::vector<double> v;
    for (const auto& e : j[key]) {
      if (!e.is_number()) throw InvalidInput(std::string("channel JSON: \"") + key + "\" must hold numbers");
      v.push_back(e.get<double>());
    }
    return v;
  };
  std::optional<GenPauliChannel> ch;
  if (j.contains("eigenvalues")) {
    ch = channel_from_eigenvalues(family, read("eigenvalues"));
    if (j.contains("probabilities")) {
      const auto p = read("probabilities");
      if (p.size() != ch->probabilities().size()) throw InvalidInput("channel JSON: probability count mismatch");
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (std::abs(p[i] - ch->probabilities()[i]) > 1e-12) {
          throw InvalidInput("channel JSON: probabilities and eigenvalues are inconsistent");
        }
      }
    }
  } else if (j.contains("probabilities")) {
    ch = channel_from_probabilities(family, read("probabilities"));
  } else {
    throw InvalidInput("channel JSON needs \"eigenvalues\" or \"probabilities\"");
  }
  if (j.contains("cp_flag") && j["cp_flag"].is_boolean() && j["cp_flag"].get<bool>() != ch->cp_flag()) {
    throw InvalidInput("channel JSON: cp_flag does not match the eigenvalues");
  }
  return *ch;
}

std::string format_csv_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << 't';
  for (const char* prefix : {"gamma_", "Gamma_", "lambda_"}) {
    for (int a = 1; a <= traj.rates(); ++a) out << ',' << prefix << a;
  }
  out << '\n';
  for (int i = 0; i < traj.points(); ++i) {
    out << format_csv_double(traj.times[i]);
    for (const Eigen::MatrixXd* m : {&traj.gammas, &traj.integrated, &traj.lambdas}) {
      for (int a = 0; a < traj.rates(); ++a) out << ',' << format_csv_double((*m)(a, i));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

json optional_number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json verdict_to_json(const Verdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    json e = {{"index", x.index}, {"t", x.t}, {"margin", x.margin}};
    if (x.alpha > 0) e["alpha"] = x.alpha;
    if (x.beta > 0) e["beta"] = x.beta;
    violations.push_back(std::move(e));
  }
  json margins = json::array();
  for (double m : v.margins) margins.push_back(optional_number(m));
  return {
      {"criterion", v.criterion},
      {"status", to_string(v.status)},
      {"min_margin", optional_number(v.min_margin)},
      {"first_violation_time", v.first_violation_time ? json(*v.first_violation_time) : json(nullptr)},
      {"violation_count", v.violations.size()},
      {"not_applicable_count", v.not_applicable.size()},
      {"violations", std::move(violations)},
      {"margins", std::move(margins)},
  };
}

json report_to_json(const DivisibilityReport& r) {
  json frob = verdict_to_json(r.frobenius_monotone.analytic);
  frob["sampled_operators"] = r.frobenius_monotone.samples;
  frob["sampled_increase_found"] = r.frobenius_monotone.increase_found;
  frob["sampled_max_relative_increase"] = r.frobenius_monotone.max_relative_increase;
  if (r.frobenius_monotone.increase_found) {
    frob["sampled_increase"] = {{"index", r.frobenius_monotone.increase_index},
                                {"operator", r.frobenius_monotone.increase_operator}};
  }

  const auto& ws = r.trace_norm_witness;
  json witness = {
      {"criterion", "trace_norm_witness"},
      {"status", ws.found() ? "found" : "none"},
      {"candidate_pairs", ws.candidate_pairs},
      {"evaluations", ws.evaluations},
      {"best_min_eigenvalue", ws.best_min_eigenvalue},
  };
  if (ws.witness) {
    const auto& w = *ws.witness;
    witness["witness"] = {{"s", w.s},
                          {"t", w.t},
                          {"s_index", w.from_index},
                          {"t_index", w.to_index},
                          {"state", complex_vector_to_json(w.state)},
                          {"min_eigenvalue", w.min_eigenvalue},
                          {"trace_norm", w.trace_norm},
                          {"violation", w.violation()}};
  }

  const auto& blp = r.blp_witness;
  json blp_json = {
      {"criterion", "blp_witness"},
      {"status", blp.increase_found ? "found" : "none"},
      {"pairs", blp.pairs},
      {"max_relative_increase", blp.max_relative_increase},
  };
  if (blp.witness) {
    const auto& w = *blp.witness;
    blp_json["witness"] = {{"index", w.index},
                           {"t_before", w.t_before},
                           {"t_after", w.t_after},
                           {"state1", complex_vector_to_json(w.state1)},
                           {"state2", complex_vector_to_json(w.state2)},
                           {"norm_before", w.norm_before},
                           {"norm_after", w.norm_after},
                           {"violation", w.norm_after - w.norm_before}};
  }

  return {
      {"label", r.label},
      {"dim", r.dim},
      {"t_max", r.t_max},
      {"steps", r.steps},
      {"seed", r.seed},
      {"negative_rates", r.negative_rates},
      {"criteria",
       {
           {"cp_map_valid", verdict_to_json(r.cp_map_valid)},
           {"cp_divisible", verdict_to_json(r.cp_divisible)},
           {"p_necessary", verdict_to_json(r.p_necessary)},
           {"p_sufficient", verdict_to_json(r.p_sufficient)},
           {"weyl_sufficient", verdict_to_json(r.weyl_sufficient)},
           {"frobenius_monotone", std::move(frob)},
           {"trace_norm_witness", std::move(witness)},
           {"blp_witness", std::move(blp_json)},
       }},
      {"hierarchy_violations", r.hierarchy_violations},
  };
}

}  // namespace gpauli
