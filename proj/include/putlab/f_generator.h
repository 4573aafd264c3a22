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

#ifndef PUTLAB_F_GENERATOR_H_
#define PUTLAB_F_GENERATOR_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace putlab {

// Number of grid points used to estimate sup-norm and Lipschitz constants of
// generators without closed forms.
inline constexpr int kGeneratorGridPoints = 10000;

// A convex generator f: [0, inf) -> R with f(1) = 0 and finite f(0), together
// with the two constants that drive the estimation-gap bounds:
//   K_{f,u} = sup { |f(x)| : x in [0, 1/u] }
//   L_{f,u} = Lipschitz constant of f on [0, 1/u].
// Built-in generators carry closed-form (certified) constants. Custom ones
// fall back to a dense grid, which only yields lower estimates; such
// generators report certified() == false.
class FGenerator {
 public:
  using ScalarFn = std::function<double(double)>;

  // f(x) = |x - 1|.
  static FGenerator TotalVariation();
  // f(x) = x^2 - 1.
  static FGenerator ChiSquared();
  // f(x) = (x^alpha - 1) / (alpha - 1), alpha > 1.
  static absl::StatusOr<FGenerator> Hellinger(double alpha);

  // `slope_at_infinity` is lim f(x)/x as x -> inf, used for cells where the
  // reference measure vanishes; nullopt means the limit is infinite.
  static FGenerator Custom(std::string name, ScalarFn f,
                           std::optional<double> slope_at_infinity =
                               std::nullopt);

  // "tv", "chi2", "hellinger:<alpha>".
  static absl::StatusOr<FGenerator> ByName(absl::string_view name);

  const std::string& name() const { return name_; }
  double operator()(double x) const { return x == 0.0 ? f_at_zero_ : f_(x); }
  double f_at_zero() const { return f_at_zero_; }
  std::optional<double> slope_at_infinity() const { return slope_at_infinity_; }
  bool certified() const { return certified_; }

  double SupNorm(double u) const { return sup_norm_(u); }
  double Lipschitz(double u) const { return lipschitz_(u); }

  // Dense-grid lower estimates of K_{f,u} and L_{f,u}; used for custom
  // generators and as a cross-check of the closed forms.
  double GridSupNorm(double u, int points = kGeneratorGridPoints) const;
  double GridLipschitz(double u, int points = kGeneratorGridPoints) const;

 private:
  FGenerator() = default;

  std::string name_;
  ScalarFn f_;
  double f_at_zero_ = 0.0;
  std::optional<double> slope_at_infinity_;
  ScalarFn sup_norm_;
  ScalarFn lipschitz_;
  bool certified_ = true;
};

// tv, chi2 and hellinger:1.5. KL is intentionally absent: its generator is
// unbounded near zero, so none of the gap bounds apply.
std::vector<FGenerator> BuiltinGenerators();

}  // namespace putlab

#endif  // PUTLAB_F_GENERATOR_H_
