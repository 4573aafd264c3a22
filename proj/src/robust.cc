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

#include "putlab/robust.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "absl/strings/str_cat.h"

namespace putlab {
namespace {

constexpr int kDescentSweeps = 40;

// Candidate neighbours of `q` at the given step, restricted to the ball.
std::vector<Matrix> Neighbours(const BallSpec& ball, const Matrix& q,
                               double step) {
  std::vector<Matrix> out;
  auto keep = [&](Matrix m) {
    if (L1Distance(m.data(), ball.center.p().data()) > ball.r) return;
    auto pmf = JointPmf::Create(ball.center.row_alphabet(),
                                ball.center.col_alphabet(), m);
    if (!pmf.ok() || !InFamily(*pmf, ball.family, 0.0)) return;
    out.push_back(std::move(m));
  };
  if (ball.family.kind == BallFamily::Kind::kBinaryPQ) {
    auto pq = PqParameters(*JointPmf::Create(ball.center.row_alphabet(),
                                             ball.center.col_alphabet(), q));
    if (!pq.has_value()) return out;
    const auto [p0, q0] = *pq;
    for (const auto& [dp, dq] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const double p = p0 + dp * step;
      const double c = q0 + dq * step;
      if (ValidatePqParameters(p, c).ok()) keep(PqMatrix(p, c));
    }
    return out;
  }
  for (size_t from = 0; from < q.size(); ++from) {
    const double amount = std::min(step, q.data()[from]);
    if (amount <= 0.0) continue;
    for (size_t to = 0; to < q.size(); ++to) {
      if (to == from) continue;
      Matrix m = q;
      m.data()[from] -= amount;
      m.data()[to] += amount;
      keep(std::move(m));
    }
  }
  return out;
}

}  // namespace

absl::StatusOr<HolderSpec> HolderForMetrics(const MetricSpec& spec_l,
                                            const MetricSpec& spec_u,
                                            const BallFamily& family) {
  auto modulus = [&](const MetricSpec& spec) -> absl::StatusOr<HolderSpec> {
    if (spec.is_pc()) return PcHolderConstants();
    if (family.kind != BallFamily::Kind::kMarginalLowerBound ||
        !(family.gamma > 0.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "metric '", spec.name(),
          "' needs a marginal lower-bound family (gamma:<g> with g > 0)"));
    }
    return FInfoHolderConstants(spec.generator(), family.gamma);
  };
  auto l = modulus(spec_l);
  if (!l.ok()) return l.status();
  auto u = modulus(spec_u);
  if (!u.ok()) return u.status();
  HolderSpec out = *l;
  out.c_u = u->c_u;
  out.certified = l->certified && u->certified;
  return out;
}

absl::StatusOr<double> WorstCaseUtility(const BallSpec& ball,
                                        const Mechanism& mech,
                                        const MetricSpec& spec_u, int samples,
                                        uint64_t seed) {
  if (mech.input_alphabet() != ball.center.col_alphabet()) {
    return absl::InvalidArgumentError(
        "mechanism input alphabet differs from the ball's X alphabet");
  }
  auto members = SampleBall(ball, samples, seed);
  if (!members.ok()) return members.status();
  const Matrix& f = mech.rows();
  Matrix best = members->front().p();
  double value = UtilityOf(spec_u, best, f);
  for (const JointPmf& q : *members) {
    const double u = UtilityOf(spec_u, q.p(), f);
    if (u < value) {
      value = u;
      best = q.p();
    }
  }
  if (ball.r == 0.0) return value;
  double step = ball.r / 4.0;
  for (int sweep = 0; sweep < kDescentSweeps && step > 1e-9; ++sweep) {
    bool improved = false;
    for (Matrix& m : Neighbours(ball, best, step)) {
      const double u = UtilityOf(spec_u, m, f);
      if (u < value) {
        value = u;
        best = std::move(m);
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

absl::StatusOr<RobustSolution> SolveRobust(const BallSpec& ball,
                                           const MetricSpec& spec_l,
                                           const MetricSpec& spec_u,
                                           double eps,
                                           const HolderSpec& holder,
                                           const SolveConfig& cfg) {
  if (!(ball.r >= 0.0)) return absl::InvalidArgumentError("radius must be >= 0");
  if (!InFamily(ball.center, ball.family)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ball center is not in family '", ball.family.name(), "'"));
  }
  const JointPmf& center = ball.center;
  const size_t ny =
      cfg.output_size > 0 ? static_cast<size_t>(cfg.output_size)
                          : center.num_cols() + 1;
  // A constant channel attains the least leakage of either metric.
  const double min_leakage = LeakageOf(
      spec_l, center.p(), Mechanism::Constant(center.col_alphabet(), ny, 0).rows());
  const double shrink = holder.c_l * std::pow(ball.r, holder.alpha);
  if (ball.r > holder.r0 || shrink > eps - min_leakage + cfg.tolerance) {
    double r_max = eps >= min_leakage
                       ? std::pow((eps - min_leakage) / holder.c_l,
                                  1.0 / holder.alpha)
                       : 0.0;
    r_max = std::min(r_max, holder.r0);
    return absl::InvalidArgumentError(absl::StrCat(
        "radius ", ball.r, " violates the range condition at eps=", eps,
        " (minimum leakage ", min_leakage, "); largest admissible radius is ",
        r_max));
  }
  const double shrunk_eps = eps - shrink;
  // With r > 0 the solver's tolerance is spent inside the shrunk budget so
  // the ball-wide guarantee holds with no slack.
  const double design_eps = ball.r > 0.0 ? shrunk_eps - cfg.tolerance : eps;
  auto sol = SolvePut(center, spec_l, spec_u, design_eps, cfg);
  if (!sol.ok()) return sol.status();

  auto members = SampleBall(ball, cfg.ball_samples, cfg.seed);
  if (!members.ok()) return members.status();
  double max_leakage = sol->leakage;
  for (const JointPmf& q : *members) {
    max_leakage = std::max(max_leakage,
                           LeakageOf(spec_l, q.p(), sol->mechanism.rows()));
  }
  auto worst = WorstCaseUtility(ball, sol->mechanism, spec_u,
                                cfg.ball_samples, cfg.seed);
  if (!worst.ok()) return worst.status();
  return RobustSolution{
      .mechanism = sol->mechanism,
      .eps = eps,
      .radius = ball.r,
      .shrunk_eps = shrunk_eps,
      .center_utility = sol->utility,
      .center_leakage = sol->leakage,
      .certified_worst_utility =
          sol->utility - holder.c_u * std::pow(ball.r, holder.alpha),
      .sampled_worst_utility = *worst,
      .sampled_max_leakage = max_leakage,
      .ball_samples = cfg.ball_samples,
      .method = sol->method,
      .feasible = sol->feasible,
  };
}

absl::StatusOr<double> Degradation(const JointPmf& p_true,
                                   const RobustSolution& robust,
                                   const MetricSpec& spec_l,
                                   const MetricSpec& spec_u, double eps,
                                   const SolveConfig& cfg) {
  if (p_true.col_alphabet() != robust.mechanism.input_alphabet()) {
    return absl::InvalidArgumentError(
        "mechanism input alphabet differs from the pmf's X alphabet");
  }
  SolveConfig grid_cfg = cfg;
  grid_cfg.output_size = static_cast<int>(robust.mechanism.output_size());
  auto h = SolvePutGrid(p_true, spec_l, spec_u, eps, grid_cfg);
  if (!h.ok()) return h.status();
  return h->utility - UtilityOf(spec_u, p_true.p(), robust.mechanism.rows());
}

}  // namespace putlab
