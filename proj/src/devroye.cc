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

#include "putlab/devroye.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace putlab {

absl::StatusOr<DevroyeReport> DevroyeRadius(double lambda, int64_t s_size,
                                            int64_t x_size, int64_t n) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda must be >= 1, got ", lambda));
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample count must be >= 1, got ", n));
  }
  if (s_size < 1 || x_size < 1) {
    return absl::InvalidArgumentError("alphabet sizes must be positive");
  }
  DevroyeReport report;
  report.lambda = lambda;
  report.big_m = s_size * x_size;
  report.n = n;
  const double m = static_cast<double>(report.big_m);
  report.radius = lambda * std::sqrt(20.0 * m / static_cast<double>(n));
  report.beta = 3.0 * std::exp(-4.0 * lambda * lambda * m / 5.0);
  return report;
}

}  // namespace putlab
