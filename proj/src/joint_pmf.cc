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

#include "putlab/joint_pmf.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace putlab {

absl::StatusOr<JointPmf> JointPmf::Create(Alphabet rows, Alphabet cols,
                                          Matrix p) {
  if (p.rows() != rows.size() || p.cols() != cols.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pmf shape ", p.rows(), "x", p.cols(), " does not match alphabets ",
        rows.size(), "x", cols.size()));
  }
  for (size_t i = 0; i < p.rows(); ++i) {
    for (size_t j = 0; j < p.cols(); ++j) {
      const double v = p(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        return absl::InvalidArgumentError(
            absl::StrCat("pmf entry (", rows.label(i), ",", cols.label(j),
                         ") = ", v, " is not a probability"));
      }
    }
  }
  const double total = p.Sum();
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("pmf sums to ", total, ", not 1"));
  }
  return JointPmf(std::move(rows), std::move(cols), std::move(p));
}

absl::StatusOr<JointPmf> JointPmf::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    return absl::InvalidArgumentError("pmf must be non-empty");
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      return absl::InvalidArgumentError("pmf rows have unequal lengths");
    }
  }
  return Create(Alphabet::Indexed("s", rows.size()),
                Alphabet::Indexed("x", rows.front().size()),
                Matrix::FromRows(rows));
}

std::vector<double> Marginal(const JointPmf& p, Axis axis) {
  return axis == Axis::kRow ? p.p().RowSums() : p.p().ColSums();
}

absl::StatusOr<double> L1Distance(const JointPmf& p, const JointPmf& q) {
  if (p.row_alphabet() != q.row_alphabet() ||
      p.col_alphabet() != q.col_alphabet()) {
    return absl::InvalidArgumentError(
        "l1 distance requires identical alphabets");
  }
  return L1Distance(p.p().data(), q.p().data());
}

double L1Distance(std::span<const double> p, std::span<const double> q) {
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total;
}

Matrix ProductOfMarginals(std::span<const double> row_marginal,
                          std::span<const double> col_marginal) {
  Matrix out(row_marginal.size(), col_marginal.size());
  for (size_t i = 0; i < row_marginal.size(); ++i) {
    for (size_t j = 0; j < col_marginal.size(); ++j) {
      out(i, j) = row_marginal[i] * col_marginal[j];
    }
  }
  return out;
}

}  // namespace putlab
