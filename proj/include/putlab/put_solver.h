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

// Privacy-utility function
//   H(P; eps) = sup { U(P, F) : F row-stochastic |X| x (|X|+1), L(P, F) <= eps }
// computed two ways: exhaustively over a simplex lattice (small alphabets,
// used as ground truth) and by restarted local search (any size).

#ifndef PUTLAB_PUT_SOLVER_H_
#define PUTLAB_PUT_SOLVER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "putlab/info_measures.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"

namespace putlab {

// Upper limit on the number of lattice mechanisms a grid solve may visit.
inline constexpr int64_t kMaxGridMechanisms = 4'000'000;

struct SolveConfig {
  // Lattice denominator per mechanism row; 0 picks 10 for |X| <= 2 and 6
  // for |X| = 3.
  int grid_resolution = 0;
  int restarts = 8;
  // Maximum number of coordinate sweeps per restart.
  int local_steps = 200;
  double tolerance = 1e-9;
  uint64_t seed = 0;
  // Ball members drawn when estimating worst-case utility and leakage.
  int ball_samples = 1000;
  // Output alphabet size; 0 means |X| + 1.
  int output_size = 0;
};

int EffectiveGridResolution(const SolveConfig& cfg, size_t x_size);

// Utility gap tolerated between the lattice optimum and the continuous one.
inline double GridSlack(int grid_resolution) { return 2.0 / grid_resolution; }

enum class SolveMethod { kGrid, kLocal, kClosedForm };
std::string SolveMethodName(SolveMethod m);

struct PutSolution {
  Mechanism mechanism;
  double eps = 0.0;
  double utility = 0.0;
  double leakage = 0.0;
  SolveMethod method = SolveMethod::kGrid;
  // False when no mechanism meets the leakage budget; `mechanism` is then
  // the least-leaking one found.
  bool feasible = true;
  std::string certificate;
};

// Every lattice mechanism evaluated once; answers H(P; eps) for any eps by
// a scan. Enumeration order is lexicographic in (row 0, row 1, ...), and
// ties resolve to the first mechanism in that order.
class PutGrid {
 public:
  // Rejects |X| > 3 and lattices larger than kMaxGridMechanisms.
  static absl::StatusOr<PutGrid> Build(const JointPmf& p,
                                       const MetricSpec& spec_l,
                                       const MetricSpec& spec_u,
                                       int grid_resolution,
                                       size_t output_size = 0);

  PutSolution Solve(double eps, double tolerance) const;

  size_t num_mechanisms() const { return leakage_.size(); }
  int grid_resolution() const { return resolution_; }
  double MinLeakage() const;
  double MaxLeakage() const;
  Mechanism MechanismAt(size_t index) const;

 private:
  PutGrid() = default;

  Alphabet x_alpha_ = Alphabet::Indexed("x", 1);
  size_t output_size_ = 0;
  int resolution_ = 0;
  // Lattice points of the output simplex, as integer numerators.
  std::vector<std::vector<int>> row_points_;
  std::vector<double> leakage_;
  std::vector<double> utility_;
};

absl::StatusOr<PutSolution> SolvePutGrid(const JointPmf& p,
                                         const MetricSpec& spec_l,
                                         const MetricSpec& spec_u, double eps,
                                         const SolveConfig& cfg);

// Restarted coordinate ascent over mechanism rows. Every iterate satisfies
// the leakage budget; moves that would break it are shortened to the
// feasibility boundary. Deterministic given cfg.seed.
absl::StatusOr<PutSolution> SolvePutLocal(const JointPmf& p,
                                          const MetricSpec& spec_l,
                                          const MetricSpec& spec_u, double eps,
                                          const SolveConfig& cfg);

// Grid when the lattice is enumerable, local search otherwise.
absl::StatusOr<PutSolution> SolvePut(const JointPmf& p,
                                     const MetricSpec& spec_l,
                                     const MetricSpec& spec_u, double eps,
                                     const SolveConfig& cfg);

struct CurvePoint {
  double eps = 0.0;
  double utility = 0.0;
  double leakage = 0.0;
  SolveMethod method = SolveMethod::kGrid;
  bool feasible = true;
  // Utility dropped below an earlier point by more than the grid slack.
  bool monotonicity_violation = false;
};

// H(P; eps) on an ascending eps grid.
absl::StatusOr<std::vector<CurvePoint>> PutCurve(
    const JointPmf& p, const MetricSpec& spec_l, const MetricSpec& spec_u,
    const std::vector<double>& eps_grid, const SolveConfig& cfg);

}  // namespace putlab

#endif  // PUTLAB_PUT_SOLVER_H_
