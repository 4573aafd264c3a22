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

#include "putlab/empirical.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace putlab {

absl::StatusOr<JointPmf> EmpiricalFromSamples(const SampleSet& samples,
                                              const Alphabet& s_alpha,
                                              const Alphabet& x_alpha) {
  if (samples.n() == 0) {
    return absl::InvalidArgumentError("sample set is empty");
  }
  std::vector<size_t> counts(s_alpha.size() * x_alpha.size(), 0);
  for (const auto& [s, x] : samples.pairs) {
    const auto si = s_alpha.IndexOf(s);
    const auto xi = x_alpha.IndexOf(x);
    if (!si || !xi) {
      return absl::InvalidArgumentError(absl::StrCat(
          "sample (", s, ",", x, ") has a label outside the declared ",
          si ? "x" : "s", " alphabet"));
    }
    ++counts[*si * x_alpha.size() + *xi];
  }
  Matrix p(s_alpha.size(), x_alpha.size());
  const double n = static_cast<double>(samples.n());
  for (size_t i = 0; i < counts.size(); ++i) {
    p.data()[i] = static_cast<double>(counts[i]) / n;
  }
  // Each count/n is correctly rounded, so the total is within a few ulps.
  return JointPmf::Create(s_alpha, x_alpha, std::move(p));
}

absl::StatusOr<SampleSet> ParseSamplesCsv(absl::string_view text) {
  SampleSet out;
  bool saw_header = false;
  size_t line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "s,x") {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": expected header \"s,x\", got \"", line,
            "\""));
      }
      saw_header = true;
      continue;
    }
    std::vector<absl::string_view> fields = absl::StrSplit(line, ',');
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected 2 fields, got ", fields.size()));
    }
    absl::string_view s = absl::StripAsciiWhitespace(fields[0]);
    absl::string_view x = absl::StripAsciiWhitespace(fields[1]);
    if (s.empty() || x.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": empty label"));
    }
    out.pairs.emplace_back(std::string(s), std::string(x));
  }
  if (!saw_header) {
    return absl::InvalidArgumentError("missing header \"s,x\"");
  }
  if (out.pairs.empty()) {
    return absl::InvalidArgumentError("no observations after header");
  }
  return out;
}

std::string FormatSamplesCsv(const SampleSet& samples) {
  std::string out = "s,x\n";
  for (const auto& [s, x] : samples.pairs) absl::StrAppend(&out, s, ",", x, "\n");
  return out;
}

std::pair<Alphabet, Alphabet> AlphabetsFromSamples(const SampleSet& samples) {
  std::vector<std::string> s_labels;
  std::vector<std::string> x_labels;
  auto add = [](std::vector<std::string>& labels, const std::string& l) {
    for (const auto& existing : labels) {
      if (existing == l) return;
    }
    labels.push_back(l);
  };
  for (const auto& [s, x] : samples.pairs) {
    add(s_labels, s);
    add(x_labels, x);
  }
  // Distinct and non-empty by construction whenever samples is non-empty.
  return {*Alphabet::Create(std::move(s_labels)),
          *Alphabet::Create(std::move(x_labels))};
}

}  // namespace putlab
