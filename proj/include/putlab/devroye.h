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

#ifndef PUTLAB_DEVROYE_H_
#define PUTLAB_DEVROYE_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace putlab {

// High-probability l1 radius of the empirical distribution of n i.i.d.
// samples over M = |S||X| cells: with probability at least 1 - beta,
//   ||P_hat - P||_1 <= lambda * sqrt(20 M / n),  beta = 3 exp(-4 lambda^2 M/5).
struct DevroyeReport {
  double lambda = 1.0;
  int64_t big_m = 0;
  int64_t n = 0;
  double radius = 0.0;
  double beta = 0.0;
};

// Requires lambda >= 1 (validity condition of the concentration inequality),
// n >= 1 and positive alphabet sizes.
absl::StatusOr<DevroyeReport> DevroyeRadius(double lambda, int64_t s_size,
                                            int64_t x_size, int64_t n);

}  // namespace putlab

#endif  // PUTLAB_DEVROYE_H_
