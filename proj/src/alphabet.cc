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

#include "putlab/alphabet.h"

#include <set>

#include "absl/strings/str_cat.h"

namespace putlab {

absl::StatusOr<Alphabet> Alphabet::Create(std::vector<std::string> labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("alphabet must contain a symbol");
  }
  std::set<absl::string_view> seen;
  for (const std::string& l : labels) {
    if (!seen.insert(l).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate alphabet label '", l, "'"));
    }
  }
  return Alphabet(std::move(labels));
}

Alphabet Alphabet::Indexed(absl::string_view prefix, size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (size_t i = 0; i < size; ++i) labels.push_back(absl::StrCat(prefix, i));
  return Alphabet(std::move(labels));
}

std::optional<size_t> Alphabet::IndexOf(absl::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::string Alphabet::FreshLabel(absl::string_view preferred) const {
  std::string candidate(preferred);
  while (Contains(candidate)) candidate.push_back('_');
  return candidate;
}

}  // namespace putlab
