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

#include "putlab/put_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "putlab/random.h"

namespace putlab {
namespace {

// All k-part compositions of d, lexicographically ascending.
std::vector<std::vector<int>> SimplexLattice(int d, size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
    if (pos + 1 == k) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

int64_t Binomial(int64_t n, int64_t k) {
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

size_t OutputSize(const SolveConfig& cfg, size_t x_size) {
  return cfg.output_size > 0 ? static_cast<size_t>(cfg.output_size)
                             : x_size + 1;
}

void NormalizeRows(Matrix& f) {
  for (size_t x = 0; x < f.rows(); ++x) {
    double total = 0.0;
    for (double& v : f.row(x)) {
      v = std::max(v, 0.0);
      total += v;
    }
    for (double& v : f.row(x)) v /= total;
  }
}

Matrix ConstantMatrix(size_t nx, size_t ny) {
  Matrix c(nx, ny);
  for (size_t x = 0; x < nx; ++x) c(x, 0) = 1.0;
  return c;
}

Matrix Blend(const Matrix& a, const Matrix& b, double t) {
  Matrix out(a.rows(), a.cols());
  for (size_t i = 0; i < a.size(); ++i) {
    out.data()[i] = (1.0 - t) * a.data()[i] + t * b.data()[i];
  }
  return out;
}

// Local search state for one leakage budget.
class LocalSearch {
 public:
  LocalSearch(const Matrix& q, const MetricSpec& spec_l,
              const MetricSpec& spec_u, double eps, double tolerance)
      : q_(q), spec_l_(spec_l), spec_u_(spec_u), budget_(eps + tolerance) {}

  bool Feasible(const Matrix& f) const {
    return LeakageOf(spec_l_, q_, f) <= budget_;
  }
  double Utility(const Matrix& f) const { return UtilityOf(spec_u_, q_, f); }

  // Moves `start` toward the (feasible) anchor until it meets the budget.
  // Leakage is convex in F, so the feasible part of the segment is an
  // interval containing the anchor.
  Matrix PullInside(const Matrix& anchor, const Matrix& start) const {
    if (Feasible(start)) return start;
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 50; ++i) {
      const double mid = 0.5 * (lo + hi);
      (Feasible(Blend(anchor, start, mid)) ? lo : hi) = mid;
    }
    return Blend(anchor, start, lo);
  }

  // Coordinate ascent: shift mass between two outputs of one row.
  Matrix Climb(Matrix f, int max_sweeps) const {
    double value = Utility(f);
    double step = 0.5;
    for (int sweep = 0; sweep < max_sweeps && step > 1e-7; ++sweep) {
      bool improved = false;
      for (size_t x = 0; x < f.rows(); ++x) {
        for (size_t from = 0; from < f.cols(); ++from) {
          for (size_t to = 0; to < f.cols(); ++to) {
            if (from == to || f(x, from) <= 0.0) continue;
            const double amount = std::min(step, f(x, from));
            auto moved = [&](double a) {
              Matrix g = f;
              g(x, from) -= a;
              g(x, to) += a;
              return g;
            };
            Matrix candidate = moved(amount);
            if (!Feasible(candidate)) {
              // Shorten the move to the feasibility boundary.
              double lo = 0.0;
              double hi = 1.0;
              for (int i = 0; i < 30; ++i) {
                const double mid = 0.5 * (lo + hi);
                (Feasible(moved(mid * amount)) ? lo : hi) = mid;
              }
              if (lo == 0.0) continue;
              candidate = moved(lo * amount);
            }
            const double u = Utility(candidate);
            if (u > value + 1e-15) {
              f = std::move(candidate);
              value = u;
              improved = true;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    return f;
  }

 private:
  const Matrix& q_;
  const MetricSpec& spec_l_;
  const MetricSpec& spec_u_;
  double budget_;
};

}  // namespace

int EffectiveGridResolution(const SolveConfig& cfg, size_t x_size) {
  if (cfg.grid_resolution > 0) return cfg.grid_resolution;
  return x_size <= 2 ? 10 : 6;
}

std::string SolveMethodName(SolveMethod m) {
  switch (m) {
    case SolveMethod::kGrid:
      return "grid";
    case SolveMethod::kLocal:
      return "local";
    case SolveMethod::kClosedForm:
      return "closed_form";
  }
  return "grid";
}

absl::StatusOr<PutGrid> PutGrid::Build(const JointPmf& p,
                                       const MetricSpec& spec_l,
                                       const MetricSpec& spec_u,
                                       int grid_resolution,
                                       size_t output_size) {
  const size_t nx = p.num_cols();
  const size_t ns = p.num_rows();
  if (output_size == 0) output_size = nx + 1;
  if (grid_resolution < 2) {
    return absl::InvalidArgumentError("grid resolution must be >= 2");
  }
  if (nx > 3) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid enumeration supports |X| <= 3 (got ", nx,
        "); use the local solver"));
  }
  const int64_t per_row = Binomial(grid_resolution + output_size - 1,
                                   static_cast<int64_t>(output_size) - 1);
  double total = 1.0;
  for (size_t x = 0; x < nx; ++x) total *= static_cast<double>(per_row);
  if (total > static_cast<double>(kMaxGridMechanisms)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "lattice has ", total, " mechanisms (limit ", kMaxGridMechanisms,
        "); lower the grid resolution or use the local solver"));
  }

  PutGrid grid;
  grid.x_alpha_ = p.col_alphabet();
  grid.output_size_ = output_size;
  grid.resolution_ = grid_resolution;
  grid.row_points_ = SimplexLattice(grid_resolution, output_size);
  const size_t npts = grid.row_points_.size();
  const size_t count = static_cast<size_t>(total);
  grid.leakage_.resize(count);
  grid.utility_.resize(count);

  const std::vector<double> px = Marginal(p, Axis::kCol);
  const double d = grid_resolution;
  // partial[level] holds sum over rows < level of P(s,x) F(x,.).
  std::vector<Matrix> partial(nx + 1, Matrix(ns, output_size));
  Matrix p_xy(nx, output_size);
  std::vector<size_t> idx(nx, 0);
  auto add_row = [&](size_t level) {
    Matrix& next = partial[level + 1];
    next = partial[level];
    const std::vector<int>& pt = grid.row_points_[idx[level]];
    for (size_t s = 0; s < ns; ++s) {
      const double w = p(s, level) / d;
      if (w == 0.0) continue;
      for (size_t y = 0; y < output_size; ++y) next(s, y) += w * pt[y];
    }
    for (size_t y = 0; y < output_size; ++y) {
      p_xy(level, y) = px[level] * pt[y] / d;
    }
  };
  for (size_t level = 0; level < nx; ++level) add_row(level);
  for (size_t m = 0; m < count; ++m) {
    grid.leakage_[m] = spec_l.Evaluate(partial[nx]);
    grid.utility_[m] = spec_u.Evaluate(p_xy);
    // Odometer increment; the last row varies fastest.
    size_t level = nx;
    while (level > 0) {
      --level;
      if (++idx[level] < npts) break;
      idx[level] = 0;
    }
    for (size_t l = level; l < nx; ++l) add_row(l);
  }
  return grid;
}

Mechanism PutGrid::MechanismAt(size_t index) const {
  const size_t nx = x_alpha_.size();
  const size_t npts = row_points_.size();
  Matrix f(nx, output_size_);
  for (size_t level = nx; level > 0; --level) {
    const std::vector<int>& pt = row_points_[index % npts];
    index /= npts;
    for (size_t y = 0; y < output_size_; ++y) {
      f(level - 1, y) = static_cast<double>(pt[y]) / resolution_;
    }
  }
  // Lattice rows are k/d fractions summing to exactly d/d up to rounding.
  return *Mechanism::Create(x_alpha_, std::move(f));
}

double PutGrid::MinLeakage() const {
  return *std::min_element(leakage_.begin(), leakage_.end());
}

double PutGrid::MaxLeakage() const {
  return *std::max_element(leakage_.begin(), leakage_.end());
}

PutSolution PutGrid::Solve(double eps, double tolerance) const {
  const double budget = eps + tolerance;
  size_t best = leakage_.size();
  for (size_t m = 0; m < leakage_.size(); ++m) {
    if (leakage_[m] <= budget &&
        (best == leakage_.size() || utility_[m] > utility_[best])) {
      best = m;
    }
  }
  bool feasible = true;
  if (best == leakage_.size()) {
    feasible = false;
    best = static_cast<size_t>(
        std::min_element(leakage_.begin(), leakage_.end()) - leakage_.begin());
  }
  return PutSolution{
      .mechanism = MechanismAt(best),
      .eps = eps,
      .utility = utility_[best],
      .leakage = leakage_[best],
      .method = SolveMethod::kGrid,
      .feasible = feasible,
      .certificate = absl::StrCat("exhaustive lattice d=", resolution_, ", ",
                                  leakage_.size(), " mechanisms"),
  };
}

absl::StatusOr<PutSolution> SolvePutGrid(const JointPmf& p,
                                         const MetricSpec& spec_l,
                                         const MetricSpec& spec_u, double eps,
                                         const SolveConfig& cfg) {
  auto grid = PutGrid::Build(p, spec_l, spec_u,
                             EffectiveGridResolution(cfg, p.num_cols()),
                             OutputSize(cfg, p.num_cols()));
  if (!grid.ok()) return grid.status();
  return grid->Solve(eps, cfg.tolerance);
}

absl::StatusOr<PutSolution> SolvePutLocal(const JointPmf& p,
                                          const MetricSpec& spec_l,
                                          const MetricSpec& spec_u, double eps,
                                          const SolveConfig& cfg) {
  if (cfg.restarts < 1) return absl::InvalidArgumentError("restarts must be >= 1");
  const size_t nx = p.num_cols();
  const size_t ny = OutputSize(cfg, nx);
  const LocalSearch search(p.p(), spec_l, spec_u, eps, cfg.tolerance);
  // A constant channel attains the least possible leakage of either metric.
  const Matrix anchor = ConstantMatrix(nx, ny);
  auto finish = [&](Matrix f, bool feasible, std::string note) {
    NormalizeRows(f);
    const double leak = LeakageOf(spec_l, p.p(), f);
    const double util = UtilityOf(spec_u, p.p(), f);
    return PutSolution{
        .mechanism = *Mechanism::Create(p.col_alphabet(), std::move(f)),
        .eps = eps,
        .utility = util,
        .leakage = leak,
        .method = SolveMethod::kLocal,
        .feasible = feasible,
        .certificate = std::move(note),
    };
  };
  if (!search.Feasible(anchor)) {
    return finish(anchor, false, "budget below the minimum leakage");
  }

  Matrix best = anchor;
  double best_value = search.Utility(anchor);
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Matrix start(nx, ny);
    if (restart == 0) {
      start = Mechanism::Identity(p.col_alphabet(), ny).rows();
    } else {
      Rng rng(cfg.seed, static_cast<uint64_t>(restart));
      start = RandomMechanism(rng, p.col_alphabet(), ny).rows();
    }
    Matrix f = search.Climb(search.PullInside(anchor, start), cfg.local_steps);
    NormalizeRows(f);
    if (!search.Feasible(f)) continue;
    const double value = search.Utility(f);
    if (value > best_value) {
      best_value = value;
      best = std::move(f);
    }
  }
  return finish(std::move(best), true,
                absl::StrCat(cfg.restarts, " restarts of coordinate ascent"));
}

absl::StatusOr<PutSolution> SolvePut(const JointPmf& p,
                                     const MetricSpec& spec_l,
                                     const MetricSpec& spec_u, double eps,
                                     const SolveConfig& cfg) {
  auto grid = SolvePutGrid(p, spec_l, spec_u, eps, cfg);
  if (grid.ok() || p.num_cols() <= 3) return grid;
  return SolvePutLocal(p, spec_l, spec_u, eps, cfg);
}

absl::StatusOr<std::vector<CurvePoint>> PutCurve(
    const JointPmf& p, const MetricSpec& spec_l, const MetricSpec& spec_u,
    const std::vector<double>& eps_grid, const SolveConfig& cfg) {
  if (!std::is_sorted(eps_grid.begin(), eps_grid.end())) {
    return absl::InvalidArgumentError("eps grid must be sorted ascending");
  }
  const int d = EffectiveGridResolution(cfg, p.num_cols());
  auto grid = PutGrid::Build(p, spec_l, spec_u, d, OutputSize(cfg, p.num_cols()));
  std::vector<CurvePoint> out;
  double running_max = -std::numeric_limits<double>::infinity();
  for (double eps : eps_grid) {
    PutSolution sol = grid.ok() ? grid->Solve(eps, cfg.tolerance) : [&] {
      auto local = SolvePutLocal(p, spec_l, spec_u, eps, cfg);
      return *std::move(local);
    }();
    CurvePoint pt{.eps = eps,
                  .utility = sol.utility,
                  .leakage = sol.leakage,
                  .method = sol.method,
                  .feasible = sol.feasible};
    if (sol.feasible) {
      pt.monotonicity_violation = sol.utility < running_max - GridSlack(d);
      running_max = std::max(running_max, sol.utility);
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace putlab
