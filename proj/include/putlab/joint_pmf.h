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

#ifndef PUTLAB_JOINT_PMF_H_
#define PUTLAB_JOINT_PMF_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "putlab/alphabet.h"
#include "putlab/matrix.h"

namespace putlab {

// Tolerance for simplex membership of joint pmfs and mechanism rows.
inline constexpr double kProbabilityTolerance = 1e-12;

enum class Axis { kRow, kCol };

// A finite joint distribution over row_alphabet x col_alphabet. In the
// privacy setting rows are the secret S and columns the observation X (or
// the release Y after a channel push-forward).
class JointPmf {
 public:
  // Rejects negative or non-finite entries, shape mismatch, and totals
  // further than kProbabilityTolerance from 1. Entries are stored verbatim.
  static absl::StatusOr<JointPmf> Create(Alphabet rows, Alphabet cols,
                                         Matrix p);

  // Convenience for tests and tools: indexed labels "s0.." and "x0..".
  static absl::StatusOr<JointPmf> FromRows(
      const std::vector<std::vector<double>>& rows);

  const Alphabet& row_alphabet() const { return rows_; }
  const Alphabet& col_alphabet() const { return cols_; }
  const Matrix& p() const { return p_; }
  double operator()(size_t r, size_t c) const { return p_(r, c); }
  size_t num_rows() const { return p_.rows(); }
  size_t num_cols() const { return p_.cols(); }

  friend bool operator==(const JointPmf& a, const JointPmf& b) = default;

 private:
  JointPmf(Alphabet rows, Alphabet cols, Matrix p)
      : rows_(std::move(rows)), cols_(std::move(cols)), p_(std::move(p)) {}

  Alphabet rows_;
  Alphabet cols_;
  Matrix p_;
};

// Row sums (kRow, the S marginal) or column sums (kCol, the X marginal).
std::vector<double> Marginal(const JointPmf& p, Axis axis);

// Entrywise sum of absolute differences. Rejects differing alphabets.
absl::StatusOr<double> L1Distance(const JointPmf& p, const JointPmf& q);

// Same quantity for plain vectors of equal length (no validation).
double L1Distance(std::span<const double> p, std::span<const double> q);

// Outer product of two probability vectors as a matrix.
Matrix ProductOfMarginals(std::span<const double> row_marginal,
                          std::span<const double> col_marginal);

}  // namespace putlab

#endif  // PUTLAB_JOINT_PMF_H_
