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

#ifndef PUTLAB_ALPHABET_H_
#define PUTLAB_ALPHABET_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace putlab {

// Ordered set of distinct symbol labels. Never empty.
class Alphabet {
 public:
  static absl::StatusOr<Alphabet> Create(std::vector<std::string> labels);

  // Labels "<prefix>0", "<prefix>1", ..., "<prefix>{size-1}". size >= 1.
  static Alphabet Indexed(absl::string_view prefix, size_t size);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_[i]; }

  std::optional<size_t> IndexOf(absl::string_view label) const;
  bool Contains(absl::string_view label) const {
    return IndexOf(label).has_value();
  }

  // Returns a label that does not occur in this alphabet, derived from
  // `preferred` by appending underscores.
  std::string FreshLabel(absl::string_view preferred) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) = default;

 private:
  explicit Alphabet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

}  // namespace putlab

#endif  // PUTLAB_ALPHABET_H_
