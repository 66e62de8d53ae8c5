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

#include "gpauli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "gpauli/channel.hpp"
#include "gpauli/dynamics.hpp"
#include "gpauli/errors.hpp"
#include "gpauli/io.hpp"
#include "gpauli/mub.hpp"
#include "gpauli/ratefn.hpp"

namespace gpauli::cli {

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw InvalidInput("failed writing " + path.string());
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw InvalidInput("cannot create output directory " + dir + ": " + ec.message());
  return p;
}

int cmd_mub(const RunConfig& cfg, std::ostream& out) {
  const int d = *cfg.dim;
  const double tol = cfg.tol.value_or(kEqualityTolerance);
  const MubFamily family = mub_family(d);
  const auto rows = cross_overlaps(family);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.overlap - 1.0 / d));
  const bool json_table = cfg.format == "json";
  const std::string family_json = mub_family_to_json(family).dump(2) + "\n";
  const std::string table = json_table ? overlaps_to_json(family).dump(2) + "\n" : overlaps_to_csv(family);

  if (cfg.out_dir.empty()) {
    out << family_json << table;
    return kExitOk;
  }
  const auto dir = prepare_out_dir(cfg.out_dir);
  const std::string stem = "mub_d" + std::to_string(d);
  write_file(dir / (stem + ".json"), family_json);
  write_file(dir / (stem + "_overlaps." + (json_table ? "json" : "csv")), table);
  out << "d = " << d << ", bases = " << family.size() << ", cross-overlap rows = " << rows.size()
      << ", max | |<psi|phi>|^2 - 1/d | = " << format_double(worst) << " ("
      << (worst <= tol ? "unbiased" : "NOT unbiased") << " at tol " << format_double(tol) << ")\n";
  return kExitOk;
}

int cmd_channel(const RunConfig& cfg, std::ostream& out) {
  const int d = *cfg.dim;
  auto family = std::make_shared<const MubFamily>(mub_family(d));
  const bool from_lambdas = !cfg.lambdas.empty();
  const GenPauliChannel ch =
      from_lambdas ? channel_from_eigenvalues(family, cfg.lambdas) : channel_from_probabilities(family, cfg.probs);
  const CpVerdict cp = fujiwara_check(d, ch.eigenvalues(), cfg.tol.value_or(kCpSlack));
  const ChoiMatrix choi = choi_matrix(ch);
  const double choi_min = choi.min_eigenvalue();

  Json j = channel_to_json(ch);
  j["cp_flag"] = cp.cp;
  j["cp_margin"] = cp.margin;
  j["cp_lower_slack"] = cp.lower_slack;
  j["cp_upper_slack"] = cp.upper_slack;
  j["choi_min_eigenvalue"] = choi_min;
  j["choi_psd"] = choi.is_cp();

  if (!cfg.out_dir.empty()) write_file(prepare_out_dir(cfg.out_dir) / "channel.json", j.dump(2) + "\n");
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == "csv") {
    out << "dim";
    for (int a = 0; a <= d + 1; ++a) out << ",p_" << a;
    for (int a = 1; a <= d + 1; ++a) out << ",lambda_" << a;
    out << ",cp_flag,cp_margin,choi_min_eigenvalue\n" << d;
    for (double x : ch.probabilities()) out << ',' << format_csv_double(x);
    for (double x : ch.eigenvalues()) out << ',' << format_csv_double(x);
    out << ',' << (cp.cp ? "true" : "false") << ',' << format_csv_double(cp.margin) << ','
        << format_csv_double(choi_min) << "\n";
    return kExitOk;
  }
  out << "d = " << d << "\n";
  out << "probabilities (p_0..p_" << d + 1 << "): " << join(ch.probabilities()) << "\n";
  out << "eigenvalues (lambda_1..lambda_" << d + 1 << "): " << join(ch.eigenvalues()) << "\n";
  out << "CP (eigenvalue bounds): " << (cp.cp ? "true" : "false") << ", margin " << format_double(cp.margin)
      << " (lower slack " << format_double(cp.lower_slack) << ", upper slack " << format_double(cp.upper_slack)
      << ")\n";
  out << "Choi minimum eigenvalue: " << format_double(choi_min) << " (" << (choi.is_cp() ? "PSD" : "not PSD")
      << ")\n";
  return kExitOk;
}

RateSet build_rates(RunConfig& cfg) {
  if (!cfg.preset.empty() && !cfg.gammas.empty()) throw InvalidInput("use either --preset or --gamma, not both");
  if (cfg.preset.empty() && cfg.gammas.empty()) throw InvalidInput("dynamics needs --preset or --gamma");
  if (!cfg.gammas.empty()) {
    const int d = cfg.dim.value_or(static_cast<int>(cfg.gammas.size()) - 1);
    cfg.dim = d;
    if (static_cast<int>(cfg.gammas.size()) != d + 1) {
      throw InvalidInput("d = " + std::to_string(d) + " needs " + std::to_string(d + 1) + " --gamma values, got " +
                         std::to_string(cfg.gammas.size()));
    }
    return rate_set_from_sources(d, cfg.gammas);
  }
  if (!cfg.dim) {
    if (cfg.preset == "eternal-qubit") {
      cfg.dim = 2;
    } else if (cfg.preset == "semigroup" && !cfg.constants.empty()) {
      cfg.dim = static_cast<int>(cfg.constants.size()) - 1;
    } else {
      throw InvalidInput("preset " + cfg.preset + " needs --d");
    }
  }
  return make_preset(cfg.preset, *cfg.dim, cfg.constants);
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << std::left << std::setw(20) << v.criterion << std::setw(16) << to_string(v.status);
  if (!std::isnan(v.min_margin)) out << " min_margin=" << format_double(v.min_margin);
  if (v.first_violation_time) out << " first_violation_t=" << format_double(*v.first_violation_time);
  if (!v.not_applicable.empty()) out << " not_applicable_points=" << v.not_applicable.size();
  out << "\n";
}

int cmd_dynamics(RunConfig& cfg, std::ostream& out) {
  if (cfg.steps < 2) throw InvalidInput("--steps must be >= 2");
  if (!(cfg.t_max > 0.0)) throw InvalidInput("--t-max must be positive");
  if (cfg.attempts < 0 || cfg.refine_iters < 0 || cfg.blp_pairs < 0) {
    throw InvalidInput("search budgets must be nonnegative");
  }
  const RateSet rates = build_rates(cfg);
  const MubFamily family = mub_family(rates.dim());

  AnalysisOptions opt;
  opt.t_max = cfg.t_max;
  opt.steps = cfg.steps;
  opt.quadrature_tol = cfg.tol.value_or(kDefaultQuadratureTol);
  opt.seed = cfg.seed;
  opt.witness.attempts = cfg.attempts;
  opt.witness.refine_iters = cfg.refine_iters;
  opt.blp_pairs = cfg.blp_pairs;
  const Analysis result = analyze(rates, family, opt);
  const std::string csv = trajectory_to_csv(result.trajectory);
  const std::string report = report_to_json(result.report).dump(2) + "\n";

  if (!cfg.out_dir.empty()) {
    const auto dir = prepare_out_dir(cfg.out_dir);
    write_file(dir / "trajectory.csv", csv);
    write_file(dir / "report.json", report);
  }
  if (cfg.format == "csv") {
    out << csv;
    return kExitOk;
  }
  if (cfg.format == "json") {
    out << report;
    return kExitOk;
  }
  const auto& r = result.report;
  out << "label: " << r.label << "  d=" << r.dim << "  t_max=" << format_double(r.t_max) << "  steps=" << r.steps
      << "  seed=" << r.seed << "\n";
  for (const Verdict* v : {&r.cp_map_valid, &r.cp_divisible, &r.p_necessary, &r.p_sufficient, &r.weyl_sufficient,
                           &r.frobenius_monotone.analytic}) {
    print_verdict(out, *v);
  }
  const auto& ws = r.trace_norm_witness;
  out << std::left << std::setw(20) << "trace_norm_witness" << (ws.found() ? "found" : "none");
  if (ws.witness) {
    out << " s=" << format_double(ws.witness->s) << " t=" << format_double(ws.witness->t)
        << " min_eigenvalue=" << format_double(ws.witness->min_eigenvalue);
  } else {
    out << " best_min_eigenvalue=" << format_double(ws.best_min_eigenvalue);
  }
  out << "\n";
  out << std::left << std::setw(20) << "blp_witness" << (r.blp_witness.increase_found ? "found" : "none")
      << " pairs=" << r.blp_witness.pairs << "\n";
  out << "hierarchy: " << (r.hierarchy_violations.empty() ? "consistent" : "VIOLATED") << "\n";
  for (const auto& h : r.hierarchy_violations) out << "  " << h << "\n";
  return kExitOk;
}

int cmd_presets(std::ostream& out) {
  for (const auto& p : preset_catalog()) {
    out << std::left << std::setw(18) << p.name << p.description;
    if (p.takes_dim) out << "  [--d]";
    if (p.takes_constants) out << " [--constants]";
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  int dim = 0;
  double tol = 0.0;

  CLI::App app{"Generalized Pauli channels from mutually unbiased bases: construction, dynamics and "
               "Markovianity checks"};
  app.require_subcommand(1);

  auto* mub = app.add_subcommand("mub", "Build the complete MUB family for prime d and its overlap table");
  mub->add_option("--d", dim, "Dimension (prime)")->required()->check(CLI::PositiveNumber);
  mub->add_option("--out", cfg.out_dir, "Write mub_d<d>.json and the overlap table into this directory");
  mub->add_option("--format", cfg.format, "Overlap table format")->check(CLI::IsMember({"csv", "json"}));
  mub->add_option("--tol", tol, "Unbiasedness tolerance for the summary line (default 1e-12)");

  auto* channel = app.add_subcommand("channel", "Convert and certify a static generalized Pauli channel");
  channel->add_option("--d", dim, "Dimension (prime)")->required()->check(CLI::PositiveNumber);
  auto* lam_opt = channel->add_option("--lambdas", cfg.lambdas, "lambda_1..lambda_{d+1}, comma separated")
                      ->delimiter(',');
  channel->add_option("--probs", cfg.probs, "p_0..p_{d+1}, comma separated")->delimiter(',')->excludes(lam_opt);
  channel->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  channel->add_option("--out", cfg.out_dir, "Write channel.json into this directory");
  channel->add_option("--tol", tol, "Slack for the eigenvalue CP bounds (default 1e-12)");

  auto* dyn = app.add_subcommand("dynamics", "Integrate a rate set and run every divisibility analyzer");
  dyn->add_option("--d", dim, "Dimension (prime)")->check(CLI::PositiveNumber);
  auto* preset_opt = dyn->add_option("--preset", cfg.preset, "Named rate set (see `presets list`)");
  dyn->add_option("--gamma", cfg.gammas, "Rate expression gamma_a(t); repeat once per a = 1..d+1")
      ->excludes(preset_opt);
  dyn->add_option("--constants", cfg.constants, "Constant rates for the semigroup preset")->delimiter(',');
  dyn->add_option("--t-max", cfg.t_max, "End of the time grid")->capture_default_str();
  dyn->add_option("--steps", cfg.steps, "Number of grid intervals")->capture_default_str();
  dyn->add_option("--seed", cfg.seed, "Seed for witness and sampling searches")->capture_default_str();
  dyn->add_option("--tol", tol, "Total quadrature tolerance (default 1e-10)");
  dyn->add_option("--attempts", cfg.attempts, "Random pure states tried by the witness search")->capture_default_str();
  dyn->add_option("--refine", cfg.refine_iters, "Refinement iterations per witness candidate")->capture_default_str();
  dyn->add_option("--blp-pairs", cfg.blp_pairs, "Random state pairs for the trace-distance check")->capture_default_str();
  dyn->add_option("--out", cfg.out_dir, "Write trajectory.csv and report.json into this directory");
  dyn->add_option("--format", cfg.format, "Print the trajectory (csv) or the report (json) to stdout")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* presets = app.add_subcommand("presets", "Preset rate sets");
  presets->require_subcommand(1);
  presets->add_subcommand("list", "List the available presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (dim != 0) cfg.dim = dim;
  if (tol != 0.0) cfg.tol = tol;

  try {
    if (mub->parsed()) {
      cfg.command = "mub";
      return cmd_mub(cfg, out);
    }
    if (channel->parsed()) {
      cfg.command = "channel";
      if (cfg.lambdas.empty() && cfg.probs.empty()) throw InvalidInput("channel needs --lambdas or --probs");
      return cmd_channel(cfg, out);
    }
    if (dyn->parsed()) {
      cfg.command = "dynamics";
      return cmd_dynamics(cfg, out);
    }
    cfg.command = "presets";
    return cmd_presets(out);
  } catch (const ParseError& e) {
    err << "error: rate expression: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const QuadratureError& e) {
    err << "error: quadrature: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const EvaluationError& e) {
    err << "error: evaluation: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace gpauli::cli
