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

// Mechanisms designed on an estimate P-hat that must keep their leakage
// guarantee for every distribution in an l1 ball around it.

#ifndef PUTLAB_ROBUST_H_
#define PUTLAB_ROBUST_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "putlab/ball.h"
#include "putlab/bounds.h"
#include "putlab/info_measures.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"
#include "putlab/put_solver.h"

namespace putlab {

// inf over the ball of U(Q, mech), estimated from above: the minimum over
// SampleBall members, refined by a descent that stays inside the ball.
absl::StatusOr<double> WorstCaseUtility(const BallSpec& ball,
                                        const Mechanism& mech,
                                        const MetricSpec& spec_u, int samples,
                                        uint64_t seed);

// Hölder moduli for a leakage/utility pair over a ball family. f-information
// moduli need the marginal lower-bound family; Pc moduli hold on any.
absl::StatusOr<HolderSpec> HolderForMetrics(const MetricSpec& spec_l,
                                            const MetricSpec& spec_u,
                                            const BallFamily& family);

struct RobustSolution {
  Mechanism mechanism;
  double eps = 0.0;
  double radius = 0.0;
  // Budget the mechanism was designed for at the center: eps - c_l r^alpha.
  double shrunk_eps = 0.0;
  double center_utility = 0.0;
  double center_leakage = 0.0;
  // center_utility - c_u r^alpha; a lower bound on utility over the ball.
  double certified_worst_utility = 0.0;
  double sampled_worst_utility = 0.0;
  double sampled_max_leakage = 0.0;
  int ball_samples = 0;
  SolveMethod method = SolveMethod::kGrid;
  // False only when the shrunk budget sits below the center's minimum
  // leakage by less than the tolerance; the least-leaking mechanism is used.
  bool feasible = true;
};

// Solves H(center; eps - c_l r^alpha) and reports how its mechanism fares
// over the ball. Requires r <= r0 and c_l r^alpha <= eps - min_F L(center, F)
// (up to cfg.tolerance); the error names the largest admissible radius.
absl::StatusOr<RobustSolution> SolveRobust(const BallSpec& ball,
                                           const MetricSpec& spec_l,
                                           const MetricSpec& spec_u,
                                           double eps,
                                           const HolderSpec& holder,
                                           const SolveConfig& cfg);

// H(p_true; eps) on the grid minus U(p_true, robust.mechanism). Reported
// raw, so it can be slightly negative within the grid slack.
absl::StatusOr<double> Degradation(const JointPmf& p_true,
                                   const RobustSolution& robust,
                                   const MetricSpec& spec_l,
                                   const MetricSpec& spec_u, double eps,
                                   const SolveConfig& cfg);

}  // namespace putlab

#endif  // PUTLAB_ROBUST_H_
