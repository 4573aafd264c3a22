// Copyright 2026 The Putlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// putlab: command-line front end.
//
// Exit codes: 0 success, 2 a bound or exactness check failed, 1 usage or
// I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "putlab/ball.h"
#include "putlab/experiments.h"
#include "putlab/f_generator.h"
#include "putlab/info_measures.h"
#include "putlab/json_io.h"
#include "putlab/put_solver.h"
#include "putlab/robust.h"

namespace putlab {
namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kCheckFailed = 2;

// Thrown out of command bodies; main maps it to exit code 1.
struct CommandError {
  std::string message;
};

template <typename T>
T Unwrap(absl::StatusOr<T> v) {
  if (!v.ok()) throw CommandError{std::string(v.status().message())};
  return *std::move(v);
}

void Check(const absl::Status& s) {
  if (!s.ok()) throw CommandError{std::string(s.message())};
}

// Writes to `path`, or to stdout when it is empty.
void Emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  Check(WriteFile(path, content));
}

JointPmf LoadPmf(const std::string& path) {
  return Unwrap(JointPmfFromJson(Unwrap(ParseJson(Unwrap(ReadFile(path))))));
}

Mechanism LoadMechanism(const std::string& path) {
  return Unwrap(MechanismFromJson(Unwrap(ParseJson(Unwrap(ReadFile(path))))));
}

std::vector<double> ParseDoubles(const std::string& text) {
  std::vector<double> out;
  for (absl::string_view piece : absl::StrSplit(text, ',')) {
    double v = 0.0;
    if (!absl::SimpleAtod(piece, &v)) {
      throw CommandError{absl::StrCat("'", piece, "' is not a number")};
    }
    out.push_back(v);
  }
  return out;
}

// --metric sets both sides; --metric-l / --metric-u override one side.
struct MetricFlags {
  std::string both = "pc";
  std::string leakage;
  std::string utility;

  void Register(CLI::App* cmd) {
    cmd->add_option("--metric", both, "tv | chi2 | hellinger:A | pc")
        ->capture_default_str();
    cmd->add_option("--metric-l", leakage, "leakage metric (default --metric)");
    cmd->add_option("--metric-u", utility, "utility metric (default --metric)");
  }
  MetricSpec Leakage() const {
    return Unwrap(MetricSpec::ByName(leakage.empty() ? both : leakage));
  }
  MetricSpec Utility() const {
    return Unwrap(MetricSpec::ByName(utility.empty() ? both : utility));
  }
};

struct SolverFlags {
  int grid = 0;
  int restarts = 8;
  int local_steps = 200;
  int output_size = 0;
  std::optional<uint64_t> seed;

  void Register(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "lattice denominator (0 = auto)");
    cmd->add_option("--restarts", restarts, "local search restarts")
        ->capture_default_str();
    cmd->add_option("--local-steps", local_steps, "sweeps per restart")
        ->capture_default_str();
    cmd->add_option("--output-size", output_size, "|Y| (0 = |X|+1)");
  }
  SolveConfig Config() const {
    SolveConfig cfg;
    cfg.grid_resolution = grid;
    cfg.restarts = restarts;
    cfg.local_steps = local_steps;
    cfg.output_size = output_size;
    cfg.seed = seed.value_or(0);
    return cfg;
  }
};

// Local search is randomized, so it needs an explicit seed.
void RequireSeedForLocal(const std::string& method, size_t x_size,
                         const std::optional<uint64_t>& seed) {
  const bool local = method == "local" || (method == "auto" && x_size > 3);
  if (local && !seed.has_value()) {
    throw CommandError{"local search needs --seed"};
  }
}

PutSolution RunSolve(const std::string& method, const JointPmf& p,
                     const MetricSpec& l, const MetricSpec& u, double eps,
                     const SolveConfig& cfg) {
  if (method == "grid") return Unwrap(SolvePutGrid(p, l, u, eps, cfg));
  if (method == "local") return Unwrap(SolvePutLocal(p, l, u, eps, cfg));
  return Unwrap(SolvePut(p, l, u, eps, cfg));
}

int Main(int argc, char** argv) {
  CLI::App app{"putlab: privacy-utility trade-off toolkit"};
  app.require_subcommand(1);
  std::string out;
  std::string pmf_path;

  // estimate
  CLI::App* estimate = app.add_subcommand(
      "estimate", "empirical pmf and concentration radius from samples");
  std::string samples_path;
  std::string report_path;
  double lambda = 1.0;
  estimate->add_option("--samples", samples_path, "CSV with header s,x")
      ->required();
  estimate->add_option("--lambda", lambda, "radius multiplier (>= 1)")
      ->capture_default_str();
  estimate->add_option("--out", out, "pmf JSON (stdout if omitted)");
  estimate->add_option("--report", report_path,
                       "radius JSON (stdout if omitted)");

  // certify
  CLI::App* certify = app.add_subcommand(
      "certify", "estimation-gap bounds for an empirical pmf");
  std::string generator = "tv";
  CertifyConfig certify_cfg;
  std::optional<double> m_s_floor;
  std::optional<double> m_x_floor;
  certify->add_option("--pmf", pmf_path, "empirical pmf JSON")->required();
  certify->add_option("--metric", generator, "tv | chi2 | hellinger:A")
      ->capture_default_str();
  certify->add_option("--gamma", certify_cfg.gamma, "merge threshold")
      ->capture_default_str();
  certify->add_option("--lambda", certify_cfg.lambda, "radius multiplier")
      ->capture_default_str();
  certify->add_option("--n", certify_cfg.n, "sample count")->required();
  certify->add_option("--m-s-floor", m_s_floor, "asserted least true S mass");
  certify->add_option("--m-x-floor", m_x_floor,
                      "asserted least true merged X mass");
  certify->add_option("--out", out, "report JSON (stdout if omitted)");

  // solve
  CLI::App* solve = app.add_subcommand("solve", "privacy-utility function");
  MetricFlags solve_metrics;
  SolverFlags solve_flags;
  std::string method = "auto";
  double eps = 0.0;
  solve->add_option("--pmf", pmf_path, "pmf JSON")->required();
  solve_metrics.Register(solve);
  solve_flags.Register(solve);
  solve->add_option("--eps", eps, "leakage budget")->required();
  solve->add_option("--method", method, "auto | grid | local")
      ->check(CLI::IsMember({"auto", "grid", "local"}))
      ->capture_default_str();
  solve->add_option("--seed", solve_flags.seed, "seed for local search");
  solve->add_option("--out", out, "solution JSON (stdout if omitted)");

  // robust
  CLI::App* robust = app.add_subcommand(
      "robust", "mechanism with a leakage guarantee over an l1 ball");
  MetricFlags robust_metrics;
  SolverFlags robust_flags;
  double radius = 0.0;
  std::string family_name = "full";
  int ball_samples = 1000;
  uint64_t robust_seed = 0;
  robust->add_option("--pmf", pmf_path, "ball center pmf JSON")->required();
  robust_metrics.Register(robust);
  robust_flags.Register(robust);
  robust->add_option("--eps", eps, "leakage budget")->required();
  robust->add_option("--radius", radius, "ball radius")->required();
  robust->add_option("--family", family_name, "full | gamma:<g> | pq")
      ->capture_default_str();
  robust->add_option("--ball-samples", ball_samples, "ball members sampled")
      ->capture_default_str();
  robust->add_option("--seed", robust_seed, "seed")->required();
  robust->add_option("--out", out, "solution JSON (stdout if omitted)");

  // curve
  CLI::App* curve = app.add_subcommand("curve", "H(P; eps) on an eps grid");
  MetricFlags curve_metrics;
  SolverFlags curve_flags;
  std::string eps_grid;
  curve->add_option("--pmf", pmf_path, "pmf JSON")->required();
  curve_metrics.Register(curve);
  curve_flags.Register(curve);
  curve->add_option("--eps-grid", eps_grid, "ascending comma-separated eps")
      ->required();
  curve->add_option("--seed", curve_flags.seed, "seed for local search");
  curve->add_option("--out", out, "CSV (stdout if omitted)");

  // montecarlo-t1
  CLI::App* mc = app.add_subcommand(
      "montecarlo-t1", "Monte Carlo check of the estimation-gap bounds");
  MonteCarloConfig mc_cfg;
  std::string mechanism_path = "random";
  std::string summary_path;
  std::string mc_generator = "tv";
  mc->add_option("--pmf", pmf_path, "true pmf JSON")->required();
  mc->add_option("--metric", mc_generator, "tv | chi2 | hellinger:A")
      ->capture_default_str();
  mc->add_option("--mechanism", mechanism_path,
                 "mechanism JSON over X plus sink, or 'random'")
      ->capture_default_str();
  mc->add_option("--gamma", mc_cfg.gamma, "merge threshold")
      ->capture_default_str();
  mc->add_option("--lambda", mc_cfg.lambda, "radius multiplier")
      ->capture_default_str();
  mc->add_option("--n", mc_cfg.n, "samples per trial")->required();
  mc->add_option("--trials", mc_cfg.trials, "trial count")->required();
  mc->add_option("--seed", mc_cfg.seed, "seed")->required();
  mc->add_option("--out", out, "trial CSV (stdout if omitted)");
  mc->add_option("--summary", summary_path,
                 "summary JSON (stdout if omitted)");

  // validate-lemma2
  CLI::App* lemma2 = app.add_subcommand(
      "validate-lemma2", "exactness of f-information under symbol merging");
  Lemma2Config l2_cfg;
  std::string l2_metric;
  std::string l2_gammas;
  lemma2->add_option("--trials", l2_cfg.trials, "instances")->required();
  lemma2->add_option("--seed", l2_cfg.seed, "seed")->required();
  lemma2->add_option("--metric", l2_metric,
                     "single generator (default: all builtins)");
  lemma2->add_option("--gamma", l2_gammas,
                     "comma-separated thresholds (default 0,0.1,0.3)");
  lemma2->add_option("--s-size", l2_cfg.s_size, "|S| (0 = random in [2,4])");
  lemma2->add_option("--x-size", l2_cfg.x_size, "|X| (0 = random in [2,4])");
  lemma2->add_option("--y-size", l2_cfg.y_size, "|Y| (0 = random in [2,5])");
  lemma2->add_option("--out", out, "summary JSON (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (estimate->parsed()) {
      EstimateResult r =
          Unwrap(RunEstimate(Unwrap(ReadFile(samples_path)), lambda));
      Emit(out, DumpJson(ToJson(r.pmf)));
      Emit(report_path, DumpJson(ToJson(r.devroye)));
      return kOk;
    }
    if (certify->parsed()) {
      certify_cfg.m_s_floor = m_s_floor;
      certify_cfg.m_x_floor = m_x_floor;
      const BoundReport r =
          Unwrap(RunCertify(LoadPmf(pmf_path),
                            Unwrap(FGenerator::ByName(generator)), certify_cfg));
      Emit(out, DumpJson(ToJson(r)));
      return kOk;
    }
    if (solve->parsed()) {
      const JointPmf p = LoadPmf(pmf_path);
      RequireSeedForLocal(method, p.num_cols(), solve_flags.seed);
      const PutSolution s =
          RunSolve(method, p, solve_metrics.Leakage(), solve_metrics.Utility(),
                   eps, solve_flags.Config());
      Emit(out, DumpJson(ToJson(s)));
      return kOk;
    }
    if (robust->parsed()) {
      robust_flags.seed = robust_seed;
      SolveConfig cfg = robust_flags.Config();
      cfg.ball_samples = ball_samples;
      const BallSpec ball{LoadPmf(pmf_path), radius,
                          Unwrap(BallFamily::ByName(family_name))};
      const MetricSpec l = robust_metrics.Leakage();
      const MetricSpec u = robust_metrics.Utility();
      const HolderSpec holder = Unwrap(HolderForMetrics(l, u, ball.family));
      const RobustSolution s =
          Unwrap(SolveRobust(ball, l, u, eps, holder, cfg));
      Emit(out, DumpJson(ToJson(s)));
      return kOk;
    }
    if (curve->parsed()) {
      const JointPmf p = LoadPmf(pmf_path);
      RequireSeedForLocal("auto", p.num_cols(), curve_flags.seed);
      const std::vector<CurvePoint> points = Unwrap(
          PutCurve(p, curve_metrics.Leakage(), curve_metrics.Utility(),
                   ParseDoubles(eps_grid), curve_flags.Config()));
      Emit(out, FormatCurveCsv(points));
      return kOk;
    }
    if (mc->parsed()) {
      if (mechanism_path != "random") {
        mc_cfg.mechanism = LoadMechanism(mechanism_path);
      }
      const MonteCarloResult r = Unwrap(MonteCarloTheorem1(
          LoadPmf(pmf_path), Unwrap(FGenerator::ByName(mc_generator)),
          mc_cfg));
      const MonteCarloSummary& s = r.summary;
      Json j;
      j["trials"] = s.trials;
      j["n"] = s.devroye.n;
      j["lambda"] = s.devroye.lambda;
      j["gamma"] = mc_cfg.gamma;
      j["generator"] = mc_generator;
      j["seed"] = mc_cfg.seed;
      j["radius"] = s.devroye.radius;
      j["beta"] = s.devroye.beta;
      j["radius_violations"] = s.radius_violations;
      j["radius_violation_frequency"] = s.radius_violation_frequency;
      j["radius_violation_allowance"] = s.radius_violation_allowance;
      j["within_radius"] = s.within_radius;
      j["leakage_bound_violations"] = s.leakage_violations;
      j["utility_bound_violations"] = s.utility_violations;
      j["max_leakage_gap"] = s.max_leakage_gap;
      j["max_utility_gap"] = s.max_utility_gap;
      j["passed"] = s.passed;
      Emit(out, FormatTrialCsv(r.records));
      Emit(summary_path, DumpJson(j));
      return s.passed ? kOk : kCheckFailed;
    }
    if (lemma2->parsed()) {
      if (l2_metric.empty()) {
        l2_cfg.generators = BuiltinGenerators();
      } else {
        l2_cfg.generators = {Unwrap(FGenerator::ByName(l2_metric))};
      }
      if (!l2_gammas.empty()) l2_cfg.gammas = ParseDoubles(l2_gammas);
      const Lemma2Summary s = Unwrap(ValidateLemma2(l2_cfg));
      Json j;
      j["trials"] = s.trials;
      j["seed"] = l2_cfg.seed;
      Json names = Json::array();
      for (const FGenerator& f : l2_cfg.generators) names.push_back(f.name());
      j["generators"] = names;
      j["gammas"] = l2_cfg.gammas;
      j["max_gap"] = s.max_gap;
      j["worst_trial"] = s.worst_trial;
      j["tolerance"] = s.tolerance;
      j["passed"] = s.passed;
      Emit(out, DumpJson(j));
      return s.passed ? kOk : kCheckFailed;
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace
}  // namespace putlab

int main(int argc, char** argv) { return putlab::Main(argc, argv); }
