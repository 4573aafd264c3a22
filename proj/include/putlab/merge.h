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

#ifndef PUTLAB_MERGE_H_
#define PUTLAB_MERGE_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "putlab/alphabet.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"

namespace putlab {

// Rare-symbol merger: every X symbol whose empirical mass is below gamma is
// sent to a fresh sink symbol, which is always the last output symbol (and
// present even when nothing is merged into it).
class MergeMap {
 public:
  double gamma() const { return gamma_; }
  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  const std::string& sink_label() const { return output_.labels().back(); }
  size_t sink_index() const { return output_.size() - 1; }

  // Output index for each input symbol.
  const std::vector<size_t>& target() const { return target_; }
  std::vector<std::string> kept_labels() const;
  bool IsKept(size_t input_index) const {
    return target_[input_index] != sink_index();
  }

  // Builds the map from an empirical X marginal; P_X(x) >= gamma keeps x.
  static absl::StatusOr<MergeMap> FromMarginal(const Alphabet& x_alpha,
                                               const std::vector<double>& px,
                                               double gamma);

  // Channel from the input alphabet to the merged alphabet.
  Mechanism AsMechanism() const;

 private:
  MergeMap(double gamma, Alphabet input, Alphabet output,
           std::vector<size_t> target)
      : gamma_(gamma),
        input_(std::move(input)),
        output_(std::move(output)),
        target_(std::move(target)) {}

  double gamma_;
  Alphabet input_;
  Alphabet output_;
  std::vector<size_t> target_;
};

// Thresholds the X marginal of p_hat and returns the merged pmf with its map.
absl::StatusOr<std::pair<JointPmf, MergeMap>> MergeRareSymbols(
    const JointPmf& p_hat, double gamma);

// Sums dropped columns of p into the sink column. p's X alphabet must equal
// the map's input alphabet.
absl::StatusOr<JointPmf> ApplyMerge(const JointPmf& p, const MergeMap& map);

// Mechanism over X that first merges and then applies `merged_channel`
// (whose input alphabet is the map's output alphabet).
absl::StatusOr<Mechanism> ComposeWithMerge(const MergeMap& map,
                                           const Mechanism& merged_channel);

}  // namespace putlab

#endif  // PUTLAB_MERGE_H_
