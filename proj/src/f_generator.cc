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

#include "putlab/f_generator.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

namespace putlab {
namespace {

// max |f| over `points` equispaced nodes of [0, 1/u].
template <typename Fn>
double GridSup(const Fn& f, double u, int points) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    best = std::max(best, std::abs(f((1.0 / u) * i / (points - 1))));
  }
  return best;
}

// Largest slope between adjacent nodes of the same grid.
template <typename Fn>
double GridSlope(const Fn& f, double u, int points) {
  const double h = (1.0 / u) / (points - 1);
  double best = 0.0;
  double prev = f(0.0);
  for (int i = 1; i < points; ++i) {
    const double cur = f(h * i);
    best = std::max(best, std::abs(cur - prev) / h);
    prev = cur;
  }
  return best;
}

}  // namespace

FGenerator FGenerator::TotalVariation() {
  FGenerator g;
  g.name_ = "tv";
  g.f_ = [](double x) { return std::abs(x - 1.0); };
  g.f_at_zero_ = 1.0;
  g.slope_at_infinity_ = 1.0;
  // |x-1| on [0, 1/u] peaks at an endpoint.
  g.sup_norm_ = [](double u) { return std::max(1.0, std::abs(1.0 / u - 1.0)); };
  g.lipschitz_ = [](double) { return 1.0; };
  return g;
}

FGenerator FGenerator::ChiSquared() {
  FGenerator g;
  g.name_ = "chi2";
  g.f_ = [](double x) { return x * x - 1.0; };
  g.f_at_zero_ = -1.0;
  g.sup_norm_ = [](double u) {
    return std::max(1.0, std::abs(1.0 / (u * u) - 1.0));
  };
  g.lipschitz_ = [](double u) { return 2.0 / u; };
  return g;
}

absl::StatusOr<FGenerator> FGenerator::Hellinger(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        absl::StrCat("hellinger order must exceed 1, got ", alpha));
  }
  FGenerator g;
  g.name_ = absl::StrCat("hellinger:", alpha);
  const double scale = 1.0 / (alpha - 1.0);
  g.f_ = [alpha, scale](double x) {
    return (std::pow(x, alpha) - 1.0) * scale;
  };
  g.f_at_zero_ = -scale;
  // f is increasing with f(0) = -1/(alpha-1); f' = alpha x^(alpha-1)/(alpha-1)
  // is increasing, so both constants are attained at the endpoints.
  g.sup_norm_ = [alpha, scale](double u) {
    return std::max(scale, std::abs((std::pow(1.0 / u, alpha) - 1.0) * scale));
  };
  g.lipschitz_ = [alpha, scale](double u) {
    return alpha * std::pow(1.0 / u, alpha - 1.0) * scale;
  };
  return g;
}

FGenerator FGenerator::Custom(std::string name, ScalarFn f,
                              std::optional<double> slope_at_infinity) {
  FGenerator g;
  g.name_ = std::move(name);
  // Right limit at zero approximated by a tiny positive argument.
  g.f_at_zero_ = f(1e-300);
  g.slope_at_infinity_ = slope_at_infinity;
  g.certified_ = false;
  const double f0 = g.f_at_zero_;
  auto eval = [f, f0](double x) { return x == 0.0 ? f0 : f(x); };
  g.sup_norm_ = [eval](double u) {
    return GridSup(eval, u, kGeneratorGridPoints);
  };
  g.lipschitz_ = [eval](double u) {
    return GridSlope(eval, u, kGeneratorGridPoints);
  };
  g.f_ = std::move(f);
  return g;
}

absl::StatusOr<FGenerator> FGenerator::ByName(absl::string_view name) {
  if (name == "tv") return TotalVariation();
  if (name == "chi2") return ChiSquared();
  if (absl::StartsWith(name, "hellinger:")) {
    double alpha = 0.0;
    if (!absl::SimpleAtod(name.substr(10), &alpha)) {
      return absl::InvalidArgumentError(
          absl::StrCat("cannot parse hellinger order in '", name, "'"));
    }
    return Hellinger(alpha);
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown generator '", name, "'; valid: tv, chi2, hellinger:<alpha>"));
}

double FGenerator::GridSupNorm(double u, int points) const {
  return GridSup([this](double x) { return (*this)(x); }, u, points);
}

double FGenerator::GridLipschitz(double u, int points) const {
  return GridSlope([this](double x) { return (*this)(x); }, u, points);
}

std::vector<FGenerator> BuiltinGenerators() {
  return {FGenerator::TotalVariation(), FGenerator::ChiSquared(),
          *FGenerator::Hellinger(1.5)};
}

}  // namespace putlab
