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

#include "putlab/experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "putlab/empirical.h"
#include "putlab/info_measures.h"
#include "putlab/json_io.h"
#include "putlab/merge.h"
#include "putlab/random.h"

namespace putlab {
namespace {

// Slack on realized-versus-bound comparisons.
constexpr double kBoundSlack = 1e-9;

double MinEntry(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

// Restriction of the fixed channel to the symbols of one merged alphabet.
absl::StatusOr<Mechanism> ChannelOnMerged(const Mechanism& fixed,
                                          const Alphabet& merged) {
  Matrix rows(merged.size(), fixed.output_size());
  for (size_t i = 0; i < merged.size(); ++i) {
    auto row = fixed.input_alphabet().IndexOf(merged.label(i));
    if (!row.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mechanism has no row for merged symbol '", merged.label(i), "'"));
    }
    for (size_t y = 0; y < rows.cols(); ++y) rows(i, y) = fixed(*row, y);
  }
  return Mechanism::Create(merged, fixed.output_alphabet(), std::move(rows));
}

}  // namespace

absl::StatusOr<EstimateResult> RunEstimate(absl::string_view samples_csv,
                                           double lambda) {
  auto samples = ParseSamplesCsv(samples_csv);
  if (!samples.ok()) return samples.status();
  if (samples->n() == 0) return absl::InvalidArgumentError("no samples");
  auto [s_alpha, x_alpha] = AlphabetsFromSamples(*samples);
  auto pmf = EmpiricalFromSamples(*samples, s_alpha, x_alpha);
  if (!pmf.ok()) return pmf.status();
  auto report =
      DevroyeRadius(lambda, static_cast<int64_t>(s_alpha.size()),
                    static_cast<int64_t>(x_alpha.size()),
                    static_cast<int64_t>(samples->n()));
  if (!report.ok()) return report.status();
  return EstimateResult{*std::move(pmf), *report};
}

double MergedMinXMass(const Matrix& merged_a, const Matrix& merged_b) {
  const std::vector<double> pa = merged_a.ColSums();
  const std::vector<double> pb = merged_b.ColSums();
  double m = std::numeric_limits<double>::infinity();
  for (size_t x = 0; x < pa.size(); ++x) {
    const bool sink = x + 1 == pa.size();
    if (sink && pa[x] == 0.0 && pb[x] == 0.0) continue;
    m = std::min({m, pa[x], pb[x]});
  }
  return m;
}

absl::StatusOr<BoundReport> RunCertify(const JointPmf& p_hat,
                                       const FGenerator& f,
                                       const CertifyConfig& cfg) {
  auto merged = MergeRareSymbols(p_hat, cfg.gamma);
  if (!merged.ok()) return merged.status();
  const Matrix& pm = merged->first.p();
  double m_s = MinEntry(pm.RowSums());
  double m_x = MergedMinXMass(pm, pm);
  if (cfg.m_s_floor.has_value()) m_s = std::min(m_s, *cfg.m_s_floor);
  if (cfg.m_x_floor.has_value()) m_x = std::min(m_x, *cfg.m_x_floor);
  if (!(m_x > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "least X mass after merging is ", m_x,
        "; raise gamma so unobserved symbols are merged"));
  }
  auto report = Theorem1Bound(f, cfg.lambda,
                              static_cast<int64_t>(p_hat.num_rows()),
                              static_cast<int64_t>(p_hat.num_cols()), cfg.n,
                              m_s, m_x);
  if (!report.ok()) return report.status();
  report->inputs.emplace_back("gamma", cfg.gamma);
  report->inputs.emplace_back("merged_x_size",
                              static_cast<double>(pm.cols()));
  if (cfg.m_s_floor.has_value()) {
    report->inputs.emplace_back("m_s_floor", *cfg.m_s_floor);
  }
  if (cfg.m_x_floor.has_value()) {
    report->inputs.emplace_back("m_x_floor", *cfg.m_x_floor);
  }
  return report;
}

absl::StatusOr<MonteCarloResult> MonteCarloTheorem1(
    const JointPmf& p, const FGenerator& f, const MonteCarloConfig& cfg) {
  if (cfg.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  auto devroye =
      DevroyeRadius(cfg.lambda, static_cast<int64_t>(p.num_rows()),
                    static_cast<int64_t>(p.num_cols()), cfg.n);
  if (!devroye.ok()) return devroye.status();
  const Alphabet& x_alpha = p.col_alphabet();
  std::vector<std::string> merged_labels = x_alpha.labels();
  merged_labels.push_back(x_alpha.FreshLabel("<merged>"));
  auto fixed_input = Alphabet::Create(merged_labels);
  if (!fixed_input.ok()) return fixed_input.status();
  Mechanism fixed = [&] {
    if (cfg.mechanism.has_value()) return *cfg.mechanism;
    Rng rng(cfg.seed, 0);
    return RandomMechanism(rng, *fixed_input, x_alpha.size() + 1);
  }();
  if (fixed.input_alphabet() != *fixed_input) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mechanism rows must be the X symbols followed by the sink '",
        merged_labels.back(), "'"));
  }

  MonteCarloResult result;
  MonteCarloSummary& sum = result.summary;
  sum.trials = cfg.trials;
  sum.devroye = *devroye;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(cfg.seed, static_cast<uint64_t>(t) + 1);
    const JointPmf p_hat = DrawEmpirical(rng, p, cfg.n);
    auto merged_hat = MergeRareSymbols(p_hat, cfg.gamma);
    if (!merged_hat.ok()) return merged_hat.status();
    const auto& [p_hat0, map] = *merged_hat;
    auto p0 = ApplyMerge(p, map);
    if (!p0.ok()) return p0.status();
    auto channel = ChannelOnMerged(fixed, map.output_alphabet());
    if (!channel.ok()) return channel.status();
    auto on_x = ComposeWithMerge(map, *channel);
    if (!on_x.ok()) return on_x.status();

    TrialRecord rec;
    rec.trial = t;
    rec.l1 = L1Distance(p_hat.p().data(), p.p().data());
    rec.radius_violated = rec.l1 > devroye->radius;
    rec.m_s = std::min(MinEntry(p_hat.p().RowSums()),
                       MinEntry(p.p().RowSums()));
    rec.m_x = MergedMinXMass(p_hat0.p(), p0->p());
    rec.hypothesis_holds = rec.m_x <= rec.m_s;
    const Matrix& ch = channel->rows();
    rec.leakage_gap =
        std::abs(FInformation(f, PushThroughKeepS(p_hat0.p(), ch)) -
                 FInformation(f, PushThroughKeepS(p0->p(), ch)));
    rec.utility_gap =
        std::abs(FInformation(f, PushThroughKeepX(p_hat0.p(), ch)) -
                 FInformation(f, PushThroughKeepX(p.p(), on_x->rows())));
    rec.leakage_bound = std::numeric_limits<double>::infinity();
    rec.utility_bound = std::numeric_limits<double>::infinity();
    auto consts = ComputeLemma1Constants(f, std::min(rec.m_s, rec.m_x),
                                         rec.m_s, rec.m_x);
    if (consts.ok()) {
      const GapBounds b = Lemma1Bounds(
          *consts, static_cast<int64_t>(p.num_rows()),
          static_cast<int64_t>(p0->num_cols()), devroye->radius);
      rec.leakage_bound = b.leakage;
      rec.utility_bound = b.utility;
    }
    rec.leakage_violated = rec.leakage_gap > rec.leakage_bound + kBoundSlack;
    rec.utility_violated = rec.utility_gap > rec.utility_bound + kBoundSlack;

    if (rec.radius_violated) {
      ++sum.radius_violations;
    } else {
      ++sum.within_radius;
      sum.leakage_violations += rec.leakage_violated;
      sum.utility_violations += rec.utility_violated;
    }
    sum.max_leakage_gap = std::max(sum.max_leakage_gap, rec.leakage_gap);
    sum.max_utility_gap = std::max(sum.max_utility_gap, rec.utility_gap);
    result.records.push_back(rec);
  }
  const double beta = devroye->beta;
  sum.radius_violation_frequency =
      static_cast<double>(sum.radius_violations) / cfg.trials;
  sum.radius_violation_allowance =
      beta + 3.0 * std::sqrt(beta * (1.0 - beta) / cfg.trials);
  sum.passed = sum.radius_violation_frequency <= sum.radius_violation_allowance &&
               sum.leakage_violations == 0 && sum.utility_violations == 0;
  return result;
}

std::string FormatTrialCsv(const std::vector<TrialRecord>& records) {
  std::string out =
      "trial,l1,radius_violated,m_s,m_x,hypothesis_holds,leakage_gap,"
      "utility_gap,leakage_bound,utility_bound,leakage_violated,"
      "utility_violated\n";
  for (const TrialRecord& r : records) {
    absl::StrAppend(&out, r.trial, ",", FormatDouble(r.l1), ",",
                    r.radius_violated ? 1 : 0, ",", FormatDouble(r.m_s), ",",
                    FormatDouble(r.m_x), ",", r.hypothesis_holds ? 1 : 0, ",",
                    FormatDouble(r.leakage_gap), ",",
                    FormatDouble(r.utility_gap), ",",
                    FormatDouble(r.leakage_bound), ",",
                    FormatDouble(r.utility_bound), ",",
                    r.leakage_violated ? 1 : 0, ",",
                    r.utility_violated ? 1 : 0, "\n");
  }
  return out;
}

absl::StatusOr<Lemma2Summary> ValidateLemma2(const Lemma2Config& cfg) {
  if (cfg.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (cfg.generators.empty() || cfg.gammas.empty()) {
    return absl::InvalidArgumentError("need at least one generator and gamma");
  }
  Lemma2Summary sum;
  sum.trials = cfg.trials;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(cfg.seed, static_cast<uint64_t>(t));
    auto size = [&](int fixed, size_t lo, size_t hi) {
      return fixed > 0 ? static_cast<size_t>(fixed)
                       : lo + rng.UniformIndex(hi - lo + 1);
    };
    const size_t ns = size(cfg.s_size, 2, 4);
    const size_t nx = size(cfg.x_size, 2, 4);
    const size_t ny = size(cfg.y_size, 2, 5);
    const FGenerator& f = cfg.generators[t % cfg.generators.size()];
    const double gamma = cfg.gammas[(t / cfg.generators.size()) %
                                    cfg.gammas.size()];
    const JointPmf p = RandomJointPmf(rng, ns, nx);
    auto merged = MergeRareSymbols(p, gamma);
    if (!merged.ok()) return merged.status();
    const auto& [p0, map] = *merged;
    const Mechanism channel = RandomMechanism(rng, map.output_alphabet(), ny);
    auto on_x = ComposeWithMerge(map, channel);
    if (!on_x.ok()) return on_x.status();
    const double gap =
        std::abs(FInformation(f, PushThroughKeepX(p.p(), on_x->rows())) -
                 FInformation(f, PushThroughKeepX(p0.p(), channel.rows())));
    if (gap > sum.max_gap) {
      sum.max_gap = gap;
      sum.worst_trial = t;
    }
  }
  sum.passed = sum.max_gap <= sum.tolerance;
  return sum;
}

}  // namespace putlab
