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

#ifndef PUTLAB_EMPIRICAL_H_
#define PUTLAB_EMPIRICAL_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "putlab/alphabet.h"
#include "putlab/joint_pmf.h"

namespace putlab {

// Observed (s, x) label pairs.
struct SampleSet {
  std::vector<std::pair<std::string, std::string>> pairs;

  size_t n() const { return pairs.size(); }
};

// Normalized co-occurrence counts; unobserved cells are zero.
absl::StatusOr<JointPmf> EmpiricalFromSamples(const SampleSet& samples,
                                              const Alphabet& s_alpha,
                                              const Alphabet& x_alpha);

// Parses "s,x" CSV text: a header line "s,x" then one observation per line.
// Blank lines are skipped; errors carry 1-based line numbers.
absl::StatusOr<SampleSet> ParseSamplesCsv(absl::string_view text);

std::string FormatSamplesCsv(const SampleSet& samples);

// Labels in order of first appearance in the samples.
std::pair<Alphabet, Alphabet> AlphabetsFromSamples(const SampleSet& samples);

}  // namespace putlab

#endif  // PUTLAB_EMPIRICAL_H_
