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

#include "putlab/merge.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace putlab {

std::vector<std::string> MergeMap::kept_labels() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < input_.size(); ++i) {
    if (IsKept(i)) out.push_back(input_.label(i));
  }
  return out;
}

absl::StatusOr<MergeMap> MergeMap::FromMarginal(const Alphabet& x_alpha,
                                                const std::vector<double>& px,
                                                double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gamma must lie in [0,1], got ", gamma));
  }
  if (px.size() != x_alpha.size()) {
    return absl::InvalidArgumentError("marginal length != alphabet size");
  }
  std::vector<std::string> out_labels;
  std::vector<size_t> target(px.size());
  for (size_t i = 0; i < px.size(); ++i) {
    if (px[i] >= gamma) {
      target[i] = out_labels.size();
      out_labels.push_back(x_alpha.label(i));
    }
  }
  const size_t sink = out_labels.size();
  for (size_t i = 0; i < px.size(); ++i) {
    if (!(px[i] >= gamma)) target[i] = sink;
  }
  out_labels.push_back(x_alpha.FreshLabel("<merged>"));
  auto output = Alphabet::Create(std::move(out_labels));
  if (!output.ok()) return output.status();
  return MergeMap(gamma, x_alpha, *std::move(output), std::move(target));
}

Mechanism MergeMap::AsMechanism() const {
  Matrix rows(input_.size(), output_.size());
  for (size_t i = 0; i < input_.size(); ++i) rows(i, target_[i]) = 1.0;
  // 0/1 rows are exactly stochastic.
  return *Mechanism::Create(input_, output_, std::move(rows));
}

absl::StatusOr<std::pair<JointPmf, MergeMap>> MergeRareSymbols(
    const JointPmf& p_hat, double gamma) {
  auto map =
      MergeMap::FromMarginal(p_hat.col_alphabet(), Marginal(p_hat, Axis::kCol),
                             gamma);
  if (!map.ok()) return map.status();
  auto merged = ApplyMerge(p_hat, *map);
  if (!merged.ok()) return merged.status();
  return std::make_pair(*std::move(merged), *std::move(map));
}

absl::StatusOr<JointPmf> ApplyMerge(const JointPmf& p, const MergeMap& map) {
  if (p.col_alphabet() != map.input_alphabet()) {
    return absl::InvalidArgumentError(
        "pmf X alphabet differs from the merge map's input alphabet");
  }
  Matrix out(p.num_rows(), map.output_alphabet().size());
  for (size_t s = 0; s < p.num_rows(); ++s) {
    for (size_t x = 0; x < p.num_cols(); ++x) {
      out(s, map.target()[x]) += p(s, x);
    }
  }
  return JointPmf::Create(p.row_alphabet(), map.output_alphabet(),
                          std::move(out));
}

absl::StatusOr<Mechanism> ComposeWithMerge(const MergeMap& map,
                                           const Mechanism& merged_channel) {
  if (merged_channel.input_alphabet() != map.output_alphabet()) {
    return absl::InvalidArgumentError(
        "channel input alphabet differs from the merged alphabet");
  }
  Matrix rows(map.input_alphabet().size(), merged_channel.output_size());
  for (size_t x = 0; x < rows.rows(); ++x) {
    for (size_t y = 0; y < rows.cols(); ++y) {
      rows(x, y) = merged_channel(map.target()[x], y);
    }
  }
  return Mechanism::Create(map.input_alphabet(),
                           merged_channel.output_alphabet(), std::move(rows));
}

}  // namespace putlab
