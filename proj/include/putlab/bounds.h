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

// Certified gap bounds between privacy/utility guarantees evaluated on two
// distributions that share a mechanism, and the utility-degradation bounds
// for mechanisms that are private uniformly over an l1 ball.

#ifndef PUTLAB_BOUNDS_H_
#define PUTLAB_BOUNDS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "putlab/f_generator.h"

namespace putlab {

// Constants of the two-distribution f-information gap bound:
//   a_f       = 4 K_{f,m_x}
//   b_f_delta = K_{f,m_x} + 2 K_{f,delta} + (2/delta + 1) L_{f,delta}
//   c_f_u     = 2 K_{f,m_x} + (2/u + 1) L_{f,m_x},  u in {m_s, m_x}
// where m_s, m_x are the smallest S- and X-marginal masses over both
// distributions.
struct Lemma1Constants {
  std::string generator;
  double delta = 0.0;
  double m_s = 0.0;
  double m_x = 0.0;
  double a_f = 0.0;
  double b_f_delta = 0.0;
  double c_f_ms = 0.0;
  double c_f_mx = 0.0;
  // False when the generator's K/L are grid estimates.
  bool certified = true;
};

// delta, m_s, m_x must lie in (0, 1].
absl::StatusOr<Lemma1Constants> ComputeLemma1Constants(const FGenerator& f,
                                                       double delta,
                                                       double m_s, double m_x);

struct GapBounds {
  double leakage = 0.0;  // bound on |I_f(P_{S1,Y1}) - I_f(P_{S2,Y2})|
  double utility = 0.0;  // bound on |I_f(P_{X1,Y1}) - I_f(P_{X2,Y2})|
  // True when the corresponding bound used the m < delta case.
  bool leakage_small_mass_case = false;
  bool utility_small_mass_case = false;
};

// `l1` is the distance between the two joints on S x X: either the true
// distance or a high-probability radius.
GapBounds Lemma1Bounds(const Lemma1Constants& c, int64_t s_size,
                       int64_t x_size, double l1);

// Audit record of a bound computation; every input is echoed.
struct BoundReport {
  std::string kind;  // lemma1 | theorem1 | theorem2 | example2
  std::string generator;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> bounds;
  std::optional<double> probability;
  bool certified = true;

  // Looks up a named bound; nullopt when absent.
  std::optional<double> bound(const std::string& name) const;
};

// Estimation-gap bounds for the empirical distribution of n samples with a
// fixed post-merge mechanism; holds with probability 1 - beta_lambda.
// Requires m_x <= m_s and lambda >= 1. `delta` defaults to m_x.
absl::StatusOr<BoundReport> Theorem1Bound(const FGenerator& f, double lambda,
                                          int64_t s_size, int64_t x_size,
                                          int64_t n, double m_s, double m_x,
                                          std::optional<double> delta =
                                              std::nullopt);

// Hölder-type moduli of leakage and utility w.r.t. the l1 distance:
//   |L(P,F) - L(Q,F)| <= c_l ||P-Q||^alpha, same for U with c_u,
// for ||P-Q|| <= r0.
struct HolderSpec {
  double r0 = std::numeric_limits<double>::infinity();
  double alpha = 1.0;
  double c_l = 0.0;
  double c_u = 0.0;
  bool certified = true;
};

// Probability of correct guessing: r0 = inf, alpha = 1, c_l = c_u = 1.
HolderSpec PcHolderConstants();

// f-information on distributions whose S and X marginals are all >= gamma:
// c_l = c_u = 2 K_{f,gamma} + (2/gamma + 1) L_{f,gamma}.
absl::StatusOr<HolderSpec> FInfoHolderConstants(const FGenerator& f,
                                                double gamma);

// H(P;eps + c_l r^a) - H(P;eps - c_l r^a) + 2 c_u r^a. Rejects h_plus <
// h_minus, which can only come from an inconsistent H evaluation.
absl::StatusOr<double> Theorem2Bound(double h_plus, double h_minus,
                                     const HolderSpec& spec, double r);

// Closed-form privacy-utility function of the binary p#q family under
// probability-of-correct-guessing leakage and utility, valid for
// eps in [p, 1-q]:
//   H = 1 - (1-q)(p+q-2pq)/(p-q) + eps (p+q-2pq)/(p-q).
absl::StatusOr<double> Example2Put(double p, double q, double eps);

// 2 p (1-q) / (p-q) * r.
absl::StatusOr<double> Example2DeltaBound(double p_hat, double q_hat,
                                          double r);

// Validates p in [1/2,1], q in [0,1/2], p+q <= 1.
absl::Status ValidatePqParameters(double p, double q);

}  // namespace putlab

#endif  // PUTLAB_BOUNDS_H_
