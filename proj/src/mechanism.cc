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

#include "putlab/mechanism.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace putlab {

absl::StatusOr<Mechanism> Mechanism::Create(Alphabet input, Alphabet output,
                                            Matrix rows) {
  if (rows.rows() != input.size() || rows.cols() != output.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mechanism shape ", rows.rows(), "x", rows.cols(),
        " does not match alphabets ", input.size(), "x", output.size()));
  }
  for (size_t x = 0; x < rows.rows(); ++x) {
    double total = 0.0;
    for (size_t y = 0; y < rows.cols(); ++y) {
      const double v = rows(x, y);
      if (!std::isfinite(v) || v < 0.0) {
        return absl::InvalidArgumentError(
            absl::StrCat("mechanism entry (", input.label(x), ",",
                         output.label(y), ") = ", v, " is not a probability"));
      }
      total += v;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mechanism row '", input.label(x), "' sums to ", total));
    }
  }
  return Mechanism(std::move(input), std::move(output), std::move(rows));
}

absl::StatusOr<Mechanism> Mechanism::Create(Alphabet input, Matrix rows) {
  if (rows.cols() == 0) {
    return absl::InvalidArgumentError("mechanism needs an output symbol");
  }
  Alphabet output = Alphabet::Indexed("y", rows.cols());
  return Create(std::move(input), std::move(output), std::move(rows));
}

Mechanism Mechanism::Identity(const Alphabet& input, size_t output_size) {
  if (output_size == 0) output_size = input.size() + 1;
  Matrix rows(input.size(), output_size);
  for (size_t x = 0; x < input.size() && x < output_size; ++x) rows(x, x) = 1;
  return Mechanism(input, Alphabet::Indexed("y", output_size), rows);
}

Mechanism Mechanism::Constant(const Alphabet& input, size_t output_size,
                              size_t target) {
  if (output_size == 0) output_size = input.size() + 1;
  Matrix rows(input.size(), output_size);
  for (size_t x = 0; x < input.size(); ++x) rows(x, target) = 1.0;
  return Mechanism(input, Alphabet::Indexed("y", output_size), rows);
}

Matrix PushThroughKeepS(const Matrix& p_sx, const Matrix& f) {
  return p_sx.Multiply(f);
}

Matrix PushThroughKeepX(const Matrix& p_sx, const Matrix& f) {
  const std::vector<double> px = p_sx.ColSums();
  Matrix out(f.rows(), f.cols());
  for (size_t x = 0; x < f.rows(); ++x) {
    for (size_t y = 0; y < f.cols(); ++y) out(x, y) = px[x] * f(x, y);
  }
  return out;
}

absl::StatusOr<JointPmf> PushThrough(const JointPmf& p_sx,
                                     const Mechanism& mech, Keep keep) {
  if (p_sx.col_alphabet() != mech.input_alphabet()) {
    return absl::InvalidArgumentError(
        "mechanism input alphabet differs from the pmf's X alphabet");
  }
  if (keep == Keep::kS) {
    return JointPmf::Create(p_sx.row_alphabet(), mech.output_alphabet(),
                            PushThroughKeepS(p_sx.p(), mech.rows()));
  }
  return JointPmf::Create(p_sx.col_alphabet(), mech.output_alphabet(),
                          PushThroughKeepX(p_sx.p(), mech.rows()));
}

}  // namespace putlab
