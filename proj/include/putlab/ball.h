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

#ifndef PUTLAB_BALL_H_
#define PUTLAB_BALL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "putlab/joint_pmf.h"

namespace putlab {

// Prior knowledge restricting the distributions considered near an estimate.
struct BallFamily {
  enum class Kind {
    kFull,                // every joint pmf
    kMarginalLowerBound,  // all S and X marginal masses >= gamma
    kBinaryPQ,            // 2x2 joints of the form p#q
  };
  Kind kind = Kind::kFull;
  double gamma = 0.0;  // only for kMarginalLowerBound

  static BallFamily Full() { return {}; }
  static BallFamily MarginalLowerBound(double gamma) {
    return {Kind::kMarginalLowerBound, gamma};
  }
  static BallFamily BinaryPQ() { return {Kind::kBinaryPQ, 0.0}; }

  // "full", "gamma:<g>", "pq".
  static absl::StatusOr<BallFamily> ByName(absl::string_view name);
  std::string name() const;
};

// { Q in family : ||Q - center||_1 <= r }.
struct BallSpec {
  JointPmf center;
  double r = 0.0;
  BallFamily family;
};

// [[(1-p)(1-q), (1-p)q], [pq, p(1-q)]].
Matrix PqMatrix(double p, double q);

// p#q = [[(1-p)(1-q), (1-p)q], [pq, p(1-q)]]: S ~ Bernoulli(p) observed
// through a binary symmetric channel with crossover q. Rows s0, s1; columns
// x0, x1.
JointPmf PqJoint(double p, double q);

// Recovers (p, q) when `joint` is 2x2 and of p#q form within `tol`.
std::optional<std::pair<double, double>> PqParameters(const JointPmf& joint,
                                                      double tol = 1e-9);

// Family membership with slack `tol` on the defining inequalities.
bool InFamily(const JointPmf& q, const BallFamily& family, double tol = 1e-12);

// Deterministic (given seed) sample of ball members. Element 0 is the
// center; every element is a valid pmf in the family with
// ||Q - center||_1 <= r. Rejects a center outside the family.
absl::StatusOr<std::vector<JointPmf>> SampleBall(const BallSpec& ball,
                                                 int count, uint64_t seed);

}  // namespace putlab

#endif  // PUTLAB_BALL_H_
