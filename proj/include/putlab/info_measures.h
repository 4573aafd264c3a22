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

#ifndef PUTLAB_INFO_MEASURES_H_
#define PUTLAB_INFO_MEASURES_H_

#include <span>
#include <string>
#include <variant>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "putlab/f_generator.h"
#include "putlab/joint_pmf.h"
#include "putlab/matrix.h"
#include "putlab/mechanism.h"

namespace putlab {

// D_f(p || q) = sum_i q_i f(p_i / q_i), with 0 f(0/0) = 0 and
// q_i = 0 < p_i contributing p_i * lim_{x->inf} f(x)/x. Fails when that
// limit is infinite for the generator.
absl::StatusOr<double> FDivergence(const FGenerator& f,
                                   std::span<const double> p,
                                   std::span<const double> q);
absl::StatusOr<double> FDivergence(const FGenerator& f, const JointPmf& p,
                                   const JointPmf& q);

// I_f(P_{U,V}) = D_f(P_{U,V} || P_U P_V). Rows are U, columns V.
double FInformation(const FGenerator& f, const Matrix& joint);
double FInformation(const FGenerator& f, const JointPmf& joint);

// Largest entry of a probability vector.
double Pc(std::span<const double> marginal);

// sum over columns v of max over rows u of P(u, v): the Bayes probability of
// guessing the row variable from the column variable.
double PcGiven(const Matrix& joint);
double PcGiven(const JointPmf& joint);

// max over cells with positive product mass of P(u,v) / (P_U(u) P_V(v)).
double MaxInformationDensity(const Matrix& joint);

// Which functional measures leakage (about S) or utility (about X).
class MetricSpec {
 public:
  struct FInfo {
    FGenerator generator;
  };
  struct CorrectGuessing {};

  static MetricSpec FInformation(FGenerator generator) {
    return MetricSpec(FInfo{std::move(generator)});
  }
  static MetricSpec ProbabilityOfCorrectGuessing() {
    return MetricSpec(CorrectGuessing{});
  }
  // "pc" or any generator name accepted by FGenerator::ByName.
  static absl::StatusOr<MetricSpec> ByName(absl::string_view name);

  bool is_pc() const {
    return std::holds_alternative<CorrectGuessing>(kind_);
  }
  // Requires !is_pc().
  const FGenerator& generator() const { return std::get<FInfo>(kind_).generator; }
  std::string name() const;

  // The functional applied to a joint whose rows are the guessed variable.
  double Evaluate(const Matrix& joint) const;

 private:
  explicit MetricSpec(std::variant<FInfo, CorrectGuessing> kind)
      : kind_(std::move(kind)) {}

  std::variant<FInfo, CorrectGuessing> kind_;
};

// Leakage about S of releasing Y = mech(X) when (S, X) ~ q_sx.
absl::StatusOr<double> Leakage(const MetricSpec& spec, const JointPmf& q_sx,
                               const Mechanism& mech);
// Utility about X of the same release.
absl::StatusOr<double> Utility(const MetricSpec& spec, const JointPmf& q_sx,
                               const Mechanism& mech);

// Unvalidated matrix forms for solver inner loops.
double LeakageOf(const MetricSpec& spec, const Matrix& q_sx, const Matrix& f);
double UtilityOf(const MetricSpec& spec, const Matrix& q_sx, const Matrix& f);

}  // namespace putlab

#endif  // PUTLAB_INFO_MEASURES_H_
