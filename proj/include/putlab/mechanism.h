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

#ifndef PUTLAB_MECHANISM_H_
#define PUTLAB_MECHANISM_H_

#include "absl/status/statusor.h"
#include "putlab/alphabet.h"
#include "putlab/joint_pmf.h"
#include "putlab/matrix.h"

namespace putlab {

// A privacy mechanism P_{Y|X}: a row-stochastic |X| x |Y| matrix.
class Mechanism {
 public:
  static absl::StatusOr<Mechanism> Create(Alphabet input, Alphabet output,
                                          Matrix rows);

  // Output alphabet "y0".."y{k-1}".
  static absl::StatusOr<Mechanism> Create(Alphabet input, Matrix rows);

  // Identity channel padded with zero columns up to `output_size` symbols
  // (default |X|+1).
  static Mechanism Identity(const Alphabet& input, size_t output_size = 0);

  // Every input maps to output symbol `target` with probability one.
  static Mechanism Constant(const Alphabet& input, size_t output_size = 0,
                            size_t target = 0);

  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  const Matrix& rows() const { return rows_; }
  double operator()(size_t x, size_t y) const { return rows_(x, y); }
  size_t input_size() const { return rows_.rows(); }
  size_t output_size() const { return rows_.cols(); }

  friend bool operator==(const Mechanism& a, const Mechanism& b) = default;

 private:
  Mechanism(Alphabet input, Alphabet output, Matrix rows)
      : input_(std::move(input)),
        output_(std::move(output)),
        rows_(std::move(rows)) {}

  Alphabet input_;
  Alphabet output_;
  Matrix rows_;
};

// Which variable stays on the rows after pushing P_{S,X} through a channel.
enum class Keep { kS, kX };

// kS: P_{S,Y}(s,y) = sum_x P(s,x) F(x,y).
// kX: P_{X,Y}(x,y) = P_X(x) F(x,y).
absl::StatusOr<JointPmf> PushThrough(const JointPmf& p_sx,
                                     const Mechanism& mech, Keep keep);

// Unvalidated matrix forms used on hot paths (solver inner loops).
Matrix PushThroughKeepS(const Matrix& p_sx, const Matrix& f);
Matrix PushThroughKeepX(const Matrix& p_sx, const Matrix& f);

}  // namespace putlab

#endif  // PUTLAB_MECHANISM_H_
