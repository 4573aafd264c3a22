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

#include "putlab/json_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace putlab {
namespace {

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (double v : m.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

absl::StatusOr<std::vector<std::string>> LabelsField(const Json& j,
                                                     const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing string array '", key, "'"));
  }
  std::vector<std::string> out;
  for (const Json& v : j[key]) {
    if (!v.is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("'", key, "' must contain only strings"));
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

absl::StatusOr<Alphabet> AlphabetField(const Json& j, const char* key) {
  auto labels = LabelsField(j, key);
  if (!labels.ok()) return labels.status();
  return Alphabet::Create(*std::move(labels));
}

absl::StatusOr<Matrix> MatrixField(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing numeric matrix '", key, "'"));
  }
  const Json& rows = j[key];
  const size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) {
      return absl::InvalidArgumentError(
          absl::StrCat("'", key, "' row ", r, " is not a length-", cols,
                       " array"));
    }
    for (size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_number()) {
        return absl::InvalidArgumentError(
            absl::StrCat("'", key, "'[", r, "][", c, "] is not a number"));
      }
      m(r, c) = rows[r][c].get<double>();
    }
  }
  return m;
}

Json PairsJson(const std::vector<std::pair<std::string, double>>& pairs) {
  Json out = Json::object();
  for (const auto& [name, value] : pairs) out[name] = value;
  return out;
}

}  // namespace

Json ToJson(const JointPmf& p) {
  Json j;
  j["s_labels"] = p.row_alphabet().labels();
  j["x_labels"] = p.col_alphabet().labels();
  j["pmf"] = MatrixJson(p.p());
  return j;
}

Json ToJson(const Mechanism& m) {
  Json j;
  j["x_labels"] = m.input_alphabet().labels();
  j["y_labels"] = m.output_alphabet().labels();
  j["rows"] = MatrixJson(m.rows());
  return j;
}

Json ToJson(const PutSolution& s) {
  Json j;
  j["eps"] = s.eps;
  j["utility"] = s.utility;
  j["leakage"] = s.leakage;
  j["method"] = SolveMethodName(s.method);
  j["feasible"] = s.feasible;
  j["certificate"] = s.certificate;
  j["mechanism"] = ToJson(s.mechanism);
  return j;
}

Json ToJson(const RobustSolution& s) {
  Json j;
  j["eps"] = s.eps;
  j["radius"] = s.radius;
  j["shrunk_eps"] = s.shrunk_eps;
  j["center_utility"] = s.center_utility;
  j["center_leakage"] = s.center_leakage;
  j["certified_worst_utility"] = s.certified_worst_utility;
  j["sampled_worst_utility"] = s.sampled_worst_utility;
  j["sampled_max_leakage"] = s.sampled_max_leakage;
  j["ball_samples"] = s.ball_samples;
  j["method"] = SolveMethodName(s.method);
  j["feasible"] = s.feasible;
  j["mechanism"] = ToJson(s.mechanism);
  return j;
}

Json ToJson(const BoundReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["generator"] = r.generator;
  j["certified"] = r.certified;
  j["inputs"] = PairsJson(r.inputs);
  j["bounds"] = PairsJson(r.bounds);
  if (r.probability.has_value()) {
    j["probability"] = *r.probability;
  } else {
    j["probability"] = nullptr;
  }
  return j;
}

Json ToJson(const DevroyeReport& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["M"] = r.big_m;
  j["n"] = r.n;
  j["radius"] = r.radius;
  j["beta"] = r.beta;
  return j;
}

absl::StatusOr<JointPmf> JointPmfFromJson(const Json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("pmf must be an object");
  auto s = AlphabetField(j, "s_labels");
  if (!s.ok()) return s.status();
  auto x = AlphabetField(j, "x_labels");
  if (!x.ok()) return x.status();
  auto m = MatrixField(j, "pmf");
  if (!m.ok()) return m.status();
  return JointPmf::Create(*std::move(s), *std::move(x), *std::move(m));
}

absl::StatusOr<Mechanism> MechanismFromJson(const Json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("mechanism must be an object");
  }
  if (j.contains("mechanism")) return MechanismFromJson(j["mechanism"]);
  auto x = AlphabetField(j, "x_labels");
  if (!x.ok()) return x.status();
  auto y = AlphabetField(j, "y_labels");
  if (!y.ok()) return y.status();
  auto m = MatrixField(j, "rows");
  if (!m.ok()) return m.status();
  return Mechanism::Create(*std::move(x), *std::move(y), *std::move(m));
}

absl::StatusOr<Json> ParseJson(absl::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr,
                       /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  return j;
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string FormatDouble(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string FormatCurveCsv(const std::vector<CurvePoint>& curve) {
  std::string out = "eps,utility,leakage,method\n";
  for (const CurvePoint& pt : curve) {
    absl::StrAppend(&out, FormatDouble(pt.eps), ",", FormatDouble(pt.utility),
                    ",", FormatDouble(pt.leakage), ",",
                    pt.feasible ? SolveMethodName(pt.method) : "infeasible",
                    "\n");
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const std::string& path, absl::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) return absl::InternalError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace putlab
