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

#include "putlab/ball.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "putlab/random.h"

namespace putlab {
namespace {

// Largest t >= 0 with (p + t dp, q + t dq) inside the p#q parameter domain.
double PqRayLimit(double p, double q, double dp, double dq) {
  double t = std::numeric_limits<double>::infinity();
  auto limit = [&t](double value, double rate, double lo, double hi) {
    if (rate > 0) t = std::min(t, (hi - value) / rate);
    if (rate < 0) t = std::min(t, (lo - value) / rate);
  };
  limit(p, dp, 0.5, 1.0);
  limit(q, dq, 0.0, 0.5);
  if (dp + dq > 0) t = std::min(t, (1.0 - p - q) / (dp + dq));
  return std::max(0.0, t);
}

// Moves from center toward a Dirichlet point; returns a member at l1
// distance at most `target`.
Matrix SimplexStep(Rng& rng, const JointPmf& center, const BallFamily& family,
                   double target) {
  const Matrix& c = center.p();
  const std::vector<double> dir = rng.Dirichlet(c.size());
  const double dist = L1Distance(c.data(), dir);
  if (dist == 0.0) return c;
  double t = std::min(1.0, target / dist);
  if (family.kind == BallFamily::Kind::kMarginalLowerBound) {
    // Marginals are affine in t; cap t where the first one reaches gamma.
    Matrix d(c.rows(), c.cols());
    std::copy(dir.begin(), dir.end(), d.data().begin());
    auto cap = [&t, &family](const std::vector<double>& from,
                             const std::vector<double>& to) {
      for (size_t i = 0; i < from.size(); ++i) {
        if (to[i] < family.gamma && from[i] > to[i]) {
          t = std::min(t, (from[i] - family.gamma) / (from[i] - to[i]));
        }
      }
    };
    cap(c.RowSums(), d.RowSums());
    cap(c.ColSums(), d.ColSums());
    t = std::max(0.0, t * (1.0 - 1e-12));
  }
  Matrix q(c.rows(), c.cols());
  auto fill = [&]() {
    for (size_t i = 0; i < c.size(); ++i) {
      q.data()[i] = (1.0 - t) * c.data()[i] + t * dir[i];
    }
  };
  fill();
  // Rounding can push the realized distance a hair past the target.
  while (L1Distance(c.data(), q.data()) > target && t > 0.0) {
    t *= 1.0 - 1e-9;
    fill();
  }
  return q;
}

Matrix PqStep(Rng& rng, const Matrix& center, double p, double q,
              double target) {
  const double theta = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  const double dp = std::cos(theta);
  const double dq = std::sin(theta);
  auto dist = [&](double t) {
    return L1Distance(center.data(), PqMatrix(p + t * dp, q + t * dq).data());
  };
  double hi = PqRayLimit(p, q, dp, dq);
  if (dist(hi) <= target) return PqMatrix(p + hi * dp, q + hi * dq);
  double lo = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (dist(mid) <= target ? lo : hi) = mid;
  }
  if (dist(lo) > target) return center;
  return PqMatrix(p + lo * dp, q + lo * dq);
}

}  // namespace

absl::StatusOr<BallFamily> BallFamily::ByName(absl::string_view name) {
  if (name == "full") return Full();
  if (name == "pq") return BinaryPQ();
  if (absl::StartsWith(name, "gamma:")) {
    double g = 0.0;
    if (!absl::SimpleAtod(name.substr(6), &g) || !(g >= 0.0 && g <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad marginal floor in family '", name, "'"));
    }
    return MarginalLowerBound(g);
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown family '", name, "'; valid: full, gamma:<g>, pq"));
}

std::string BallFamily::name() const {
  switch (kind) {
    case Kind::kFull:
      return "full";
    case Kind::kMarginalLowerBound:
      return absl::StrCat("gamma:", gamma);
    case Kind::kBinaryPQ:
      return "pq";
  }
  return "full";
}

Matrix PqMatrix(double p, double q) {
  Matrix m(2, 2);
  m(0, 0) = (1 - p) * (1 - q);
  m(0, 1) = (1 - p) * q;
  m(1, 0) = p * q;
  m(1, 1) = p * (1 - q);
  return m;
}

JointPmf PqJoint(double p, double q) {
  return *JointPmf::Create(Alphabet::Indexed("s", 2), Alphabet::Indexed("x", 2),
                           PqMatrix(p, q));
}

std::optional<std::pair<double, double>> PqParameters(const JointPmf& joint,
                                                      double tol) {
  if (joint.num_rows() != 2 || joint.num_cols() != 2) return std::nullopt;
  const double p = joint(1, 0) + joint(1, 1);
  const double q = p > 0 ? joint(1, 0) / p : joint(0, 1) / (1.0 - p);
  if (L1Distance(joint.p().data(), PqMatrix(p, q).data()) > tol) {
    return std::nullopt;
  }
  return std::make_pair(p, q);
}

bool InFamily(const JointPmf& q, const BallFamily& family, double tol) {
  switch (family.kind) {
    case BallFamily::Kind::kFull:
      return true;
    case BallFamily::Kind::kMarginalLowerBound: {
      for (double m : Marginal(q, Axis::kRow)) {
        if (m < family.gamma - tol) return false;
      }
      for (double m : Marginal(q, Axis::kCol)) {
        if (m < family.gamma - tol) return false;
      }
      return true;
    }
    case BallFamily::Kind::kBinaryPQ: {
      const auto pq = PqParameters(q);
      return pq && pq->first >= 0.5 - tol && pq->first <= 1.0 + tol &&
             pq->second >= -tol && pq->second <= 0.5 + tol &&
             pq->first + pq->second <= 1.0 + tol;
    }
  }
  return false;
}

absl::StatusOr<std::vector<JointPmf>> SampleBall(const BallSpec& ball,
                                                 int count, uint64_t seed) {
  if (count < 1) return absl::InvalidArgumentError("count must be >= 1");
  if (!(ball.r >= 0.0)) return absl::InvalidArgumentError("radius must be >= 0");
  if (!InFamily(ball.center, ball.family)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ball center is not in family '", ball.family.name(),
        "'; the feasible set is empty"));
  }
  std::optional<std::pair<double, double>> pq;
  if (ball.family.kind == BallFamily::Kind::kBinaryPQ) {
    pq = PqParameters(ball.center);
  }
  std::vector<JointPmf> out;
  out.reserve(count);
  out.push_back(ball.center);
  for (int i = 1; i < count; ++i) {
    if (ball.r == 0.0) {
      out.push_back(ball.center);
      continue;
    }
    Rng rng(seed, static_cast<uint64_t>(i));
    const double target = rng.Uniform(0.0, ball.r);
    Matrix m = pq ? PqStep(rng, ball.center.p(), pq->first, pq->second, target)
                  : SimplexStep(rng, ball.center, ball.family, target);
    auto member = JointPmf::Create(ball.center.row_alphabet(),
                                   ball.center.col_alphabet(), std::move(m));
    if (!member.ok()) return member.status();
    out.push_back(*std::move(member));
  }
  return out;
}

}  // namespace putlab
