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

#include "putlab/info_measures.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace putlab {

absl::StatusOr<double> FDivergence(const FGenerator& f,
                                   std::span<const double> p,
                                   std::span<const double> q) {
  if (p.size() != q.size()) {
    return absl::InvalidArgumentError("f-divergence of unequal lengths");
  }
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (q[i] > 0.0) {
      total += q[i] * f(p[i] / q[i]);
    } else if (p[i] > 0.0) {
      const auto slope = f.slope_at_infinity();
      if (!slope) {
        return absl::InvalidArgumentError(absl::StrCat(
            "D_", f.name(), " diverges: cell ", i,
            " has positive mass where the reference measure vanishes"));
      }
      total += p[i] * *slope;
    }
  }
  return total;
}

absl::StatusOr<double> FDivergence(const FGenerator& f, const JointPmf& p,
                                   const JointPmf& q) {
  if (p.row_alphabet() != q.row_alphabet() ||
      p.col_alphabet() != q.col_alphabet()) {
    return absl::InvalidArgumentError(
        "f-divergence requires identical alphabets");
  }
  return FDivergence(f, p.p().data(), q.p().data());
}

double FInformation(const FGenerator& f, const Matrix& joint) {
  const std::vector<double> pu = joint.RowSums();
  const std::vector<double> pv = joint.ColSums();
  double total = 0.0;
  for (size_t u = 0; u < joint.rows(); ++u) {
    for (size_t v = 0; v < joint.cols(); ++v) {
      const double prod = pu[u] * pv[v];
      // A zero product forces a zero joint cell: 0 f(0/0) = 0.
      if (prod > 0.0) total += prod * f(joint(u, v) / prod);
    }
  }
  return total;
}

double FInformation(const FGenerator& f, const JointPmf& joint) {
  return FInformation(f, joint.p());
}

double Pc(std::span<const double> marginal) {
  return *std::max_element(marginal.begin(), marginal.end());
}

double PcGiven(const Matrix& joint) {
  double total = 0.0;
  for (size_t v = 0; v < joint.cols(); ++v) {
    double best = 0.0;
    for (size_t u = 0; u < joint.rows(); ++u) best = std::max(best, joint(u, v));
    total += best;
  }
  return total;
}

double PcGiven(const JointPmf& joint) { return PcGiven(joint.p()); }

double MaxInformationDensity(const Matrix& joint) {
  const std::vector<double> pu = joint.RowSums();
  const std::vector<double> pv = joint.ColSums();
  double best = 0.0;
  for (size_t u = 0; u < joint.rows(); ++u) {
    for (size_t v = 0; v < joint.cols(); ++v) {
      const double prod = pu[u] * pv[v];
      if (prod > 0.0) best = std::max(best, joint(u, v) / prod);
    }
  }
  return best;
}

absl::StatusOr<MetricSpec> MetricSpec::ByName(absl::string_view name) {
  if (name == "pc") return ProbabilityOfCorrectGuessing();
  auto g = FGenerator::ByName(name);
  if (!g.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown metric '", name, "'; valid: pc, tv, chi2, hellinger:<alpha>"));
  }
  return FInformation(*std::move(g));
}

std::string MetricSpec::name() const {
  return is_pc() ? "pc" : generator().name();
}

double MetricSpec::Evaluate(const Matrix& joint) const {
  if (is_pc()) return PcGiven(joint);
  return putlab::FInformation(generator(), joint);
}

double LeakageOf(const MetricSpec& spec, const Matrix& q_sx, const Matrix& f) {
  return spec.Evaluate(PushThroughKeepS(q_sx, f));
}

double UtilityOf(const MetricSpec& spec, const Matrix& q_sx, const Matrix& f) {
  return spec.Evaluate(PushThroughKeepX(q_sx, f));
}

absl::StatusOr<double> Leakage(const MetricSpec& spec, const JointPmf& q_sx,
                               const Mechanism& mech) {
  auto p_sy = PushThrough(q_sx, mech, Keep::kS);
  if (!p_sy.ok()) return p_sy.status();
  return spec.Evaluate(p_sy->p());
}

absl::StatusOr<double> Utility(const MetricSpec& spec, const JointPmf& q_sx,
                               const Mechanism& mech) {
  auto p_xy = PushThrough(q_sx, mech, Keep::kX);
  if (!p_xy.ok()) return p_xy.status();
  return spec.Evaluate(p_xy->p());
}

}  // namespace putlab
