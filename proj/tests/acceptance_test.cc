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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "putlab/ball.h"
#include "putlab/bounds.h"
#include "putlab/empirical.h"
#include "putlab/experiments.h"
#include "putlab/f_generator.h"
#include "putlab/info_measures.h"
#include "putlab/joint_pmf.h"
#include "putlab/json_io.h"
#include "putlab/mechanism.h"
#include "putlab/put_solver.h"
#include "putlab/random.h"
#include "putlab/robust.h"

#ifndef PUTLAB_CLI_PATH
#error "PUTLAB_CLI_PATH must name the putlab executable"
#endif

namespace putlab {
namespace {

namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<Verdict()> run;
};

std::string Num(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

double MinOf(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

const MetricSpec& PcSpec() {
  static const MetricSpec* const kPc =
      new MetricSpec(MetricSpec::ProbabilityOfCorrectGuessing());
  return *kPc;
}

Verdict MergeExactness() {
  Lemma2Config cfg;
  cfg.trials = 500;
  cfg.seed = 101;
  cfg.generators = BuiltinGenerators();
  const auto s = ValidateLemma2(cfg);
  if (!s.ok()) return {false, std::string(s.status().message())};
  return {s->passed && s->max_gap <= 1e-10,
          "max gap " + Num(s->max_gap) + " over " + std::to_string(s->trials) +
              " instances"};
}

Verdict GapBoundValidity() {
  double worst = -INFINITY;
  int small_case = 0;
  int large_case = 0;
  int failures = 0;
  for (uint64_t t = 0; t < 1000; ++t) {
    Rng rng(202, t);
    const size_t ns = 2 + rng.UniformIndex(2);
    const size_t nx = 2 + rng.UniformIndex(2);
    const JointPmf p1 = RandomJointPmf(rng, ns, nx);
    JointPmf p2 = RandomJointPmf(rng, ns, nx);
    // Half the pairs are close, where the bounds are least loose.
    if (t % 2 == 0) {
      const double w = rng.Uniform(0.0, 0.2);
      Matrix mix = p1.p();
      for (size_t i = 0; i < ns; ++i) {
        for (size_t j = 0; j < nx; ++j) {
          mix(i, j) = (1 - w) * p1.p()(i, j) + w * p2.p()(i, j);
        }
      }
      p2 = *JointPmf::Create(p1.row_alphabet(), p1.col_alphabet(), mix);
    }
    const Mechanism m =
        RandomMechanism(rng, p1.col_alphabet(), 2 + rng.UniformIndex(3));
    const double m_s = std::min(MinOf(Marginal(p1, Axis::kRow)),
                                MinOf(Marginal(p2, Axis::kRow)));
    const double m_x = std::min(MinOf(Marginal(p1, Axis::kCol)),
                                MinOf(Marginal(p2, Axis::kCol)));
    const double l1 = *L1Distance(p1, p2);
    for (const FGenerator& f : BuiltinGenerators()) {
      const double dl =
          std::abs(FInformation(f, PushThroughKeepS(p1.p(), m.rows())) -
                   FInformation(f, PushThroughKeepS(p2.p(), m.rows())));
      const double du =
          std::abs(FInformation(f, PushThroughKeepX(p1.p(), m.rows())) -
                   FInformation(f, PushThroughKeepX(p2.p(), m.rows())));
      for (double delta : {m_x, 0.5 * m_x, std::min(1.0, 2.0 * m_x)}) {
        const auto c = ComputeLemma1Constants(f, delta, m_s, m_x);
        if (!c.ok()) return {false, std::string(c.status().message())};
        const GapBounds g = Lemma1Bounds(*c, ns, nx, l1);
        small_case += g.leakage_small_mass_case + g.utility_small_mass_case;
        large_case += !g.leakage_small_mass_case + !g.utility_small_mass_case;
        worst = std::max({worst, dl - g.leakage, du - g.utility});
        failures += (dl > g.leakage + 1e-9) + (du > g.utility + 1e-9);
      }
    }
  }
  return {failures == 0 && small_case > 0 && large_case > 0,
          std::to_string(failures) + " violations, max excess " + Num(worst) +
              ", branch checks small/large " + std::to_string(small_case) +
              "/" + std::to_string(large_case)};
}

Verdict DensityRatio() {
  double worst = -INFINITY;
  int failures = 0;
  for (uint64_t t = 0; t < 1000; ++t) {
    Rng rng(303, t);
    const JointPmf p =
        RandomJointPmf(rng, 2 + rng.UniformIndex(3), 2 + rng.UniformIndex(3));
    const Mechanism m =
        RandomMechanism(rng, p.col_alphabet(), 2 + rng.UniformIndex(4));
    const double bound = 1.0 / MinOf(Marginal(p, Axis::kCol));
    for (const Matrix& joint : {PushThroughKeepS(p.p(), m.rows()),
                                PushThroughKeepX(p.p(), m.rows())}) {
      const double ratio = MaxInformationDensity(joint);
      worst = std::max(worst, ratio - bound);
      failures += ratio > bound + 1e-10;
    }
  }
  return {failures == 0, std::to_string(failures) +
                             " violations, max ratio minus bound " +
                             Num(worst)};
}

Verdict MonteCarloSampleBounds() {
  const JointPmf p = *JointPmf::FromRows({{0.25, 0.25}, {0.25, 0.25}});
  bool pass = true;
  std::string detail;
  for (const FGenerator& f : BuiltinGenerators()) {
    MonteCarloConfig cfg;
    cfg.lambda = 1.0;
    cfg.n = 500;
    cfg.trials = 1000;
    cfg.seed = 404;
    const auto r = MonteCarloTheorem1(p, f, cfg);
    if (!r.ok()) return {false, std::string(r.status().message())};
    const MonteCarloSummary& s = r->summary;
    pass = pass && s.passed &&
           s.radius_violation_frequency <= s.radius_violation_allowance &&
           s.leakage_violations == 0 && s.utility_violations == 0;
    detail += f.name() + ": freq " + Num(s.radius_violation_frequency) +
              " <= " + Num(s.radius_violation_allowance) + ", gap violations " +
              std::to_string(s.leakage_violations + s.utility_violations) +
              "; ";
  }
  detail += "beta " + Num(3 * std::exp(-3.2));
  return {pass, detail};
}

Verdict Example2Agreement() {
  const std::vector<std::pair<double, double>> params = {
      {0.6, 0.2}, {0.75, 0.1}, {0.9, 0.05}};
  SolveConfig cfg;
  cfg.grid_resolution = 10;
  double worst = 0.0;
  for (const auto& [p, q] : params) {
    const JointPmf joint = PqJoint(p, q);
    for (int k = 0; k < 5; ++k) {
      const double eps = p + k * (1 - q - p) / 4;
      const auto grid = SolvePutGrid(joint, PcSpec(), PcSpec(), eps, cfg);
      const auto closed = Example2Put(p, q, eps);
      if (!grid.ok() || !closed.ok()) return {false, "solve failed"};
      worst = std::max(worst, std::abs(grid->utility - *closed));
    }
  }
  const double anchor = *Example2Put(0.6, 0.2, 0.7);
  return {worst <= GridSlack(10) && std::abs(anchor - 0.86) < 1e-12,
          "max |grid - closed form| " + Num(worst) + " <= " +
              Num(GridSlack(10)) + ", H(0.6,0.2;0.7) = " + Num(anchor)};
}

Verdict PcHolder() {
  double worst = -INFINITY;
  int failures = 0;
  for (uint64_t t = 0; t < 10000; ++t) {
    Rng rng(606, t);
    const size_t ns = 2 + rng.UniformIndex(3);
    const size_t nx = 2 + rng.UniformIndex(3);
    const JointPmf p = RandomJointPmf(rng, ns, nx);
    Matrix q = RandomJointPmf(rng, ns, nx).p();
    if (t % 2 == 0) {
      const double w = rng.Uniform(0.0, 0.1);
      for (size_t i = 0; i < ns; ++i) {
        for (size_t j = 0; j < nx; ++j) {
          q(i, j) = (1 - w) * p.p()(i, j) + w * q(i, j);
        }
      }
    }
    const Mechanism m =
        RandomMechanism(rng, p.col_alphabet(), 2 + rng.UniformIndex(4));
    const double l1 = L1Distance(p.p().data(), q.data());
    const double dl = std::abs(LeakageOf(PcSpec(), p.p(), m.rows()) -
                               LeakageOf(PcSpec(), q, m.rows()));
    const double du = std::abs(UtilityOf(PcSpec(), p.p(), m.rows()) -
                               UtilityOf(PcSpec(), q, m.rows()));
    worst = std::max({worst, dl - l1, du - l1});
    failures += (dl > l1 + 1e-12) + (du > l1 + 1e-12);
  }
  return {failures == 0, std::to_string(failures) +
                             " violations, max gap minus distance " +
                             Num(worst)};
}

// One robust design problem on a binary Pc instance.
struct BinaryInstance {
  BallSpec ball;
  double eps = 0.0;
  bool pq = false;
};

// Ten generic and ten p#q instances with budgets that leave room for the
// shrunk budget above the least leakage.
std::vector<BinaryInstance> BinaryInstances() {
  std::vector<BinaryInstance> out;
  for (uint64_t t = 0; out.size() < 10; ++t) {
    Rng rng(707, t);
    const JointPmf center = RandomJointPmf(rng, 2, 2);
    const double lo = Pc(Marginal(center, Axis::kRow));
    const double hi = PcGiven(center);
    const double r = rng.Uniform(0.005, 0.04);
    if (hi - lo < 2 * r + 0.02) continue;
    const double eps = rng.Uniform(lo + r + 0.01, hi);
    out.push_back({{center, r, BallFamily::Full()}, eps, false});
  }
  for (uint64_t t = 0; out.size() < 20; ++t) {
    Rng rng(708, t);
    const double p = rng.Uniform(0.6, 0.9);
    const double q = rng.Uniform(0.05, 0.2);
    const double r = rng.Uniform(0.005, 0.04);
    if ((1 - q) - p < 2 * r + 0.02) continue;
    const double eps = rng.Uniform(p + r + 0.01, 1 - q - r);
    out.push_back({{PqJoint(p, q), r, BallFamily::BinaryPQ()}, eps, true});
  }
  return out;
}

Verdict DegradationEndToEnd() {
  SolveConfig cfg;
  cfg.seed = 7;
  cfg.ball_samples = 200;
  const double slack = GridSlack(EffectiveGridResolution(cfg, 2));
  const HolderSpec holder = PcHolderConstants();
  double worst_t2 = -INFINITY;
  double worst_e2 = -INFINITY;
  int failures = 0;
  int checks = 0;
  int index = 0;
  for (const BinaryInstance& inst : BinaryInstances()) {
    const BallSpec& ball = inst.ball;
    const auto robust = SolveRobust(ball, PcSpec(), PcSpec(), inst.eps, holder, cfg);
    if (!robust.ok()) return {false, std::string(robust.status().message())};
    const auto grid = PutGrid::Build(ball.center, PcSpec(), PcSpec(),
                                     EffectiveGridResolution(cfg, 2));
    if (!grid.ok()) return {false, std::string(grid.status().message())};
    const double h_plus = grid->Solve(inst.eps + ball.r, cfg.tolerance).utility;
    const double h_minus =
        grid->Solve(inst.eps - ball.r, cfg.tolerance).utility;
    const double t2 = *Theorem2Bound(h_plus, h_minus, holder, ball.r);
    double e2 = INFINITY;
    if (inst.pq) {
      const auto pq = *PqParameters(ball.center);
      e2 = *Example2DeltaBound(pq.first, pq.second, ball.r);
    }
    const auto truths = SampleBall(ball, 10, 7000 + index++);
    if (!truths.ok()) return {false, std::string(truths.status().message())};
    for (const JointPmf& truth : *truths) {
      const auto delta = Degradation(truth, *robust, PcSpec(), PcSpec(), inst.eps, cfg);
      if (!delta.ok()) return {false, std::string(delta.status().message())};
      ++checks;
      worst_t2 = std::max(worst_t2, *delta - t2);
      failures += *delta > t2 + 2 * slack;
      if (inst.pq) {
        worst_e2 = std::max(worst_e2, *delta - e2);
        failures += *delta > e2 + slack;
      }
    }
  }
  return {failures == 0,
          std::to_string(checks) + " truths, " + std::to_string(failures) +
              " violations, max (delta - theorem bound) " + Num(worst_t2) +
              ", max (delta - closed-form bound) " + Num(worst_e2)};
}

Verdict RobustReplay() {
  SolveConfig cfg;
  cfg.seed = 8;
  cfg.ball_samples = 100;
  struct Case {
    BallSpec ball;
    MetricSpec spec;
    double eps;
  };
  std::vector<Case> cases;
  for (const BinaryInstance& inst : BinaryInstances()) {
    cases.push_back({inst.ball, PcSpec(), inst.eps});
  }
  const MetricSpec tv = MetricSpec::FInformation(FGenerator::TotalVariation());
  const MetricSpec chi2 = MetricSpec::FInformation(FGenerator::ChiSquared());
  for (uint64_t t = 0; t < 10; ++t) {
    Rng rng(808, t);
    const JointPmf center = RandomJointPmf(rng, 2, 2 + rng.UniformIndex(2));
    const double gamma = 0.5 * std::min(MinOf(Marginal(center, Axis::kRow)),
                                        MinOf(Marginal(center, Axis::kCol)));
    const MetricSpec& spec = t % 2 == 0 ? tv : chi2;
    const BallFamily family = BallFamily::MarginalLowerBound(gamma);
    const HolderSpec h = *HolderForMetrics(spec, spec, family);
    const double top = *Leakage(spec, center,
                                Mechanism::Identity(center.col_alphabet()));
    const double eps = 0.5 * top;
    const double r = std::min(0.5 * eps / h.c_l, 0.5 * h.r0);
    cases.push_back({{center, r, family}, spec, eps});
  }
  int failures = 0;
  int replays = 0;
  double worst = -INFINITY;
  uint64_t seed = 9000;
  for (const Case& c : cases) {
    const auto holder = HolderForMetrics(c.spec, c.spec, c.ball.family);
    if (!holder.ok()) return {false, std::string(holder.status().message())};
    const auto robust = SolveRobust(c.ball, c.spec, c.spec, c.eps, *holder, cfg);
    if (!robust.ok()) return {false, std::string(robust.status().message())};
    const auto fresh = SampleBall(c.ball, 1000, seed++);
    if (!fresh.ok()) return {false, std::string(fresh.status().message())};
    for (const JointPmf& q : *fresh) {
      const double leak = LeakageOf(c.spec, q.p(), robust->mechanism.rows());
      worst = std::max(worst, leak - c.eps);
      failures += leak > c.eps + 1e-9;
      ++replays;
    }
  }
  return {failures == 0, std::to_string(cases.size()) + " mechanisms, " +
                             std::to_string(replays) + " replays, " +
                             std::to_string(failures) +
                             " over budget, max leakage minus eps " +
                             Num(worst)};
}

Verdict MonotonicitySweep() {
  const MetricSpec tv = MetricSpec::FInformation(FGenerator::TotalVariation());
  const MetricSpec chi2 = MetricSpec::FInformation(FGenerator::ChiSquared());
  const std::vector<std::pair<MetricSpec, MetricSpec>> pairs = {
      {PcSpec(), PcSpec()}, {tv, tv}, {chi2, chi2}, {PcSpec(), tv}, {tv, PcSpec()}};
  SolveConfig cfg;
  cfg.seed = 9;
  int failures = 0;
  double worst_drop = 0.0;
  for (uint64_t t = 0; t < 50; ++t) {
    Rng rng(909, t);
    const JointPmf p =
        RandomJointPmf(rng, 2 + rng.UniformIndex(2), 2 + rng.UniformIndex(2));
    const auto& [spec_l, spec_u] = pairs[t % pairs.size()];
    const double lo = *Leakage(spec_l, p, Mechanism::Constant(p.col_alphabet()));
    const double hi = *Leakage(spec_l, p, Mechanism::Identity(p.col_alphabet()));
    std::vector<double> grid;
    for (int k = 0; k < 10; ++k) grid.push_back(lo + k * (hi - lo) / 9);
    const auto curve = PutCurve(p, spec_l, spec_u, grid, cfg);
    if (!curve.ok()) return {false, std::string(curve.status().message())};
    const double slack =
        GridSlack(EffectiveGridResolution(cfg, p.col_alphabet().size()));
    double best = -INFINITY;
    for (const CurvePoint& pt : *curve) {
      worst_drop = std::max(worst_drop, best - pt.utility);
      failures += pt.utility < best - slack || pt.monotonicity_violation;
      best = std::max(best, pt.utility);
    }
  }
  return {failures == 0, std::to_string(failures) +
                             " violations, largest drop " + Num(worst_drop)};
}

int RunCommand(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& path) {
  const auto text = ReadFile(path.string());
  return text.ok() ? *text : std::string("<missing>");
}

Verdict CliDeterminism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("putlab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path pmf = dir / "pmf.json";
  const fs::path pq = dir / "pq.json";
  const fs::path uniform = dir / "uniform.json";
  const fs::path samples = dir / "samples.csv";
  const JointPmf base =
      *JointPmf::FromRows({{0.3, 0.15, 0.05}, {0.1, 0.2, 0.2}});
  Rng rng(1010);
  if (!WriteFile(pmf.string(), DumpJson(ToJson(base))).ok() ||
      !WriteFile(pq.string(), DumpJson(ToJson(PqJoint(0.7, 0.15)))).ok() ||
      !WriteFile(uniform.string(),
                 DumpJson(ToJson(*JointPmf::FromRows(
                     {{0.25, 0.25}, {0.25, 0.25}}))))
           .ok() ||
      !WriteFile(samples.string(),
                 FormatSamplesCsv(DrawSamples(rng, base, 400)))
           .ok()) {
    return {false, "could not write inputs to " + dir.string()};
  }

  struct Command {
    std::string name;
    // Arguments; "{out}" names the per-run output directory.
    std::string args;
    std::vector<std::string> outputs;
  };
  const std::string p = pmf.string();
  const std::vector<Command> commands = {
      {"estimate",
       "estimate --samples " + samples.string() +
           " --lambda 1.5 --out {out}/pmf.json --report {out}/report.json",
       {"pmf.json", "report.json"}},
      {"certify",
       "certify --pmf " + p +
           " --metric chi2 --gamma 0.1 --n 5000 --out {out}/cert.json",
       {"cert.json"}},
      {"solve-grid",
       "solve --pmf " + p + " --metric pc --eps 0.6 --out {out}/grid.json",
       {"grid.json"}},
      {"solve-local",
       "solve --pmf " + p +
           " --metric tv --eps 0.05 --method local --seed 7"
           " --out {out}/local.json",
       {"local.json"}},
      {"robust",
       "robust --pmf " + pq.string() +
           " --metric pc --eps 0.78 --radius 0.04 --family pq"
           " --ball-samples 200 --seed 3 --out {out}/robust.json",
       {"robust.json"}},
      {"curve",
       "curve --pmf " + p +
           " --metric pc --eps-grid 0.5,0.55,0.6,0.65,0.7"
           " --out {out}/curve.csv",
       {"curve.csv"}},
      {"montecarlo-t1",
       "montecarlo-t1 --pmf " + uniform.string() +
           " --metric tv --n 500 --trials 100 --seed 11"
           " --out {out}/mc.csv --summary {out}/mc.json",
       {"mc.csv", "mc.json"}},
      {"validate-lemma2",
       "validate-lemma2 --trials 60 --seed 5 --out {out}/lemma2.json",
       {"lemma2.json"}},
      {"solve-stdout", "solve --pmf " + p + " --metric chi2 --eps 0.1",
       {}},
  };

  int mismatches = 0;
  std::string detail;
  for (const Command& c : commands) {
    int codes[2];
    std::string stdout_text[2];
    std::vector<std::string> files[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (c.name + "_" + std::to_string(run));
      fs::create_directories(out);
      std::string args = c.args;
      for (size_t at; (at = args.find("{out}")) != std::string::npos;) {
        args.replace(at, 5, out.string());
      }
      codes[run] = RunCommand(std::string(PUTLAB_CLI_PATH) + " " + args +
                              " > " + (out / "stdout").string() + " 2> " +
                              (out / "stderr").string());
      stdout_text[run] = Slurp(out / "stdout");
      for (const std::string& f : c.outputs) {
        files[run].push_back(Slurp(out / f));
      }
    }
    const bool same = codes[0] == codes[1] && stdout_text[0] == stdout_text[1] &&
                      files[0] == files[1];
    const bool ok = same && (codes[0] == 0 || codes[0] == 2);
    if (!ok) {
      ++mismatches;
      detail += c.name + " (exit " + std::to_string(codes[0]) + "/" +
                std::to_string(codes[1]) + (same ? "" : ", bytes differ") +
                ") ";
    }
  }
  fs::remove_all(dir);
  return {mismatches == 0,
          std::to_string(commands.size()) + " commands run twice, " +
              std::to_string(mismatches) + " failures " + detail};
}

}  // namespace
}  // namespace putlab

int main() {
  using putlab::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "symbol merging preserves f-information", 10,
       putlab::MergeExactness},
      {2, "two-distribution gap bounds hold", 30, putlab::GapBoundValidity},
      {3, "information-density ratio bound", 0, putlab::DensityRatio},
      {4, "empirical radius and estimation-gap Monte Carlo", 60,
       putlab::MonteCarloSampleBounds},
      {5, "grid solver matches the binary closed form", 120,
       putlab::Example2Agreement},
      {6, "correct-guessing Hölder constant is one", 0, putlab::PcHolder},
      {7, "robust degradation within its bounds", 120,
       putlab::DegradationEndToEnd},
      {8, "robust mechanisms stay within budget on the ball", 0,
       putlab::RobustReplay},
      {9, "privacy-utility function is nondecreasing", 0,
       putlab::MonotonicitySweep},
      {10, "CLI output is byte-identical across reruns", 0,
       putlab::CliDeterminism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    putlab::Verdict v = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      v.pass = false;
      v.detail += " [over the " + putlab::Num(c.time_limit_s) + " s limit]";
    }
    failed += !v.pass;
    std::printf("%s  criterion %2d  %s: %s (%.2f s)\n",
                v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
