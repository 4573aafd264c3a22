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

// Experiment drivers behind the command-line tool. Each is a pure function
// of its inputs and seed.

#ifndef PUTLAB_EXPERIMENTS_H_
#define PUTLAB_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "putlab/bounds.h"
#include "putlab/devroye.h"
#include "putlab/f_generator.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"

namespace putlab {

struct EstimateResult {
  JointPmf pmf;
  DevroyeReport devroye;
};

// Empirical pmf of "s,x" CSV samples and its concentration radius.
absl::StatusOr<EstimateResult> RunEstimate(absl::string_view samples_csv,
                                           double lambda);

struct CertifyConfig {
  double gamma = 0.0;
  double lambda = 1.0;
  int64_t n = 0;
  // Asserted lower bounds on the true S and merged-X marginal masses.
  std::optional<double> m_s_floor;
  std::optional<double> m_x_floor;
};

// Merges rare symbols of p_hat, takes m_S and m_X from the merged marginals
// (and the floors), and reports the estimation-gap bounds.
absl::StatusOr<BoundReport> RunCertify(const JointPmf& p_hat,
                                       const FGenerator& f,
                                       const CertifyConfig& cfg);

// Smallest X-marginal mass over the merged alphabet of both pmfs. A sink
// that is empty in both carries no mass and is skipped.
double MergedMinXMass(const Matrix& merged_a, const Matrix& merged_b);

struct TrialRecord {
  int trial = 0;
  double l1 = 0.0;
  bool radius_violated = false;
  double m_s = 0.0;
  double m_x = 0.0;
  // m_x <= m_s, the stated hypothesis; other trials are still checked
  // with delta = min(m_s, m_x).
  bool hypothesis_holds = true;
  double leakage_gap = 0.0;
  double utility_gap = 0.0;
  double leakage_bound = 0.0;
  double utility_bound = 0.0;
  bool leakage_violated = false;
  bool utility_violated = false;
};

struct MonteCarloConfig {
  double gamma = 0.0;
  double lambda = 1.0;
  int64_t n = 500;
  int trials = 1000;
  uint64_t seed = 0;
  // Fixed channel on the merged alphabet: one row per X symbol plus a last
  // row for the sink. nullopt draws a random one from the seed.
  std::optional<Mechanism> mechanism;
};

struct MonteCarloSummary {
  int trials = 0;
  DevroyeReport devroye;
  int radius_violations = 0;
  double radius_violation_frequency = 0.0;
  // beta + 3 sqrt(beta (1 - beta) / trials).
  double radius_violation_allowance = 0.0;
  int within_radius = 0;
  int leakage_violations = 0;  // among trials within the radius
  int utility_violations = 0;
  double max_leakage_gap = 0.0;
  double max_utility_gap = 0.0;
  bool passed = false;
};

struct MonteCarloResult {
  std::vector<TrialRecord> records;
  MonteCarloSummary summary;
};

absl::StatusOr<MonteCarloResult> MonteCarloTheorem1(const JointPmf& p,
                                                    const FGenerator& f,
                                                    const MonteCarloConfig& cfg);

std::string FormatTrialCsv(const std::vector<TrialRecord>& records);

struct Lemma2Config {
  int trials = 500;
  uint64_t seed = 0;
  // 0 draws each size uniformly per trial: |S|, |X| in [2, 4], |Y| in [2, 5].
  int s_size = 0;
  int x_size = 0;
  int y_size = 0;
  // Cycled through across trials.
  std::vector<FGenerator> generators;
  std::vector<double> gammas = {0.0, 0.1, 0.3};
};

struct Lemma2Summary {
  int trials = 0;
  double max_gap = 0.0;
  int worst_trial = 0;
  double tolerance = 1e-10;
  bool passed = false;
};

// max |I_f(P_{X,Y0}) - I_f(P_{X0,Y0})| over random instances.
absl::StatusOr<Lemma2Summary> ValidateLemma2(const Lemma2Config& cfg);

}  // namespace putlab

#endif  // PUTLAB_EXPERIMENTS_H_
