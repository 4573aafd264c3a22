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

// JSON and CSV file formats. Objects keep insertion order so output bytes
// depend only on the values written.
//
//   JointPmf:  {"s_labels": [...], "x_labels": [...], "pmf": [[...], ...]}
//   Mechanism: {"x_labels": [...], "y_labels": [...], "rows": [[...], ...]}

#ifndef PUTLAB_JSON_IO_H_
#define PUTLAB_JSON_IO_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "putlab/bounds.h"
#include "putlab/devroye.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"
#include "putlab/put_solver.h"
#include "putlab/robust.h"

namespace putlab {

using Json = nlohmann::ordered_json;

Json ToJson(const JointPmf& p);
Json ToJson(const Mechanism& m);
Json ToJson(const PutSolution& s);
Json ToJson(const RobustSolution& s);
Json ToJson(const BoundReport& r);
Json ToJson(const DevroyeReport& r);

absl::StatusOr<JointPmf> JointPmfFromJson(const Json& j);
// Accepts a bare mechanism or any object carrying one under "mechanism"
// (solution files).
absl::StatusOr<Mechanism> MechanismFromJson(const Json& j);

absl::StatusOr<Json> ParseJson(absl::string_view text);
// Two-space indentation with a trailing newline.
std::string DumpJson(const Json& j);

// Header "eps,utility,leakage,method".
std::string FormatCurveCsv(const std::vector<CurvePoint>& curve);

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double v);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, absl::string_view content);

}  // namespace putlab

#endif  // PUTLAB_JSON_IO_H_
