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

#include "putlab/bounds.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "putlab/devroye.h"

namespace putlab {
namespace {

bool InUnitInterval(double v) { return v > 0.0 && v <= 1.0; }

}  // namespace

absl::StatusOr<Lemma1Constants> ComputeLemma1Constants(const FGenerator& f,
                                                       double delta,
                                                       double m_s,
                                                       double m_x) {
  if (!InUnitInterval(delta) || !InUnitInterval(m_s) || !InUnitInterval(m_x)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "delta, m_s and m_x must lie in (0,1]; got ", delta, ", ", m_s, ", ",
        m_x));
  }
  Lemma1Constants c;
  c.generator = f.name();
  c.delta = delta;
  c.m_s = m_s;
  c.m_x = m_x;
  c.certified = f.certified();
  const double k_mx = f.SupNorm(m_x);
  const double l_mx = f.Lipschitz(m_x);
  c.a_f = 4.0 * k_mx;
  c.b_f_delta = k_mx + 2.0 * f.SupNorm(delta) +
                (2.0 / delta + 1.0) * f.Lipschitz(delta);
  c.c_f_ms = 2.0 * k_mx + (2.0 / m_s + 1.0) * l_mx;
  c.c_f_mx = 2.0 * k_mx + (2.0 / m_x + 1.0) * l_mx;
  return c;
}

GapBounds Lemma1Bounds(const Lemma1Constants& c, int64_t s_size,
                       int64_t x_size, double l1) {
  GapBounds out;
  if (c.m_s < c.delta) {
    out.leakage_small_mass_case = true;
    out.leakage = c.a_f * static_cast<double>(s_size) * c.delta +
                  c.b_f_delta * l1;
  } else {
    out.leakage = c.c_f_ms * l1;
  }
  if (c.m_x < c.delta) {
    out.utility_small_mass_case = true;
    out.utility = c.a_f * static_cast<double>(x_size) * c.delta +
                  c.b_f_delta * l1;
  } else {
    out.utility = c.c_f_mx * l1;
  }
  return out;
}

std::optional<double> BoundReport::bound(const std::string& name) const {
  for (const auto& [k, v] : bounds) {
    if (k == name) return v;
  }
  return std::nullopt;
}

absl::StatusOr<BoundReport> Theorem1Bound(const FGenerator& f, double lambda,
                                          int64_t s_size, int64_t x_size,
                                          int64_t n, double m_s, double m_x,
                                          std::optional<double> delta) {
  if (m_x > m_s) {
    return absl::InvalidArgumentError(absl::StrCat(
        "least X mass m_x = ", m_x, " exceeds least S mass m_s = ", m_s,
        "; the estimation bound requires m_x <= m_s"));
  }
  auto radius = DevroyeRadius(lambda, s_size, x_size, n);
  if (!radius.ok()) return radius.status();
  const double d = delta.value_or(m_x);
  auto consts = ComputeLemma1Constants(f, d, m_s, m_x);
  if (!consts.ok()) return consts.status();
  const GapBounds gaps = Lemma1Bounds(*consts, s_size, x_size, radius->radius);

  BoundReport report;
  report.kind = "theorem1";
  report.generator = f.name();
  report.certified = consts->certified;
  report.inputs = {{"lambda", lambda},
                   {"s_size", static_cast<double>(s_size)},
                   {"x_size", static_cast<double>(x_size)},
                   {"n", static_cast<double>(n)},
                   {"m_s", m_s},
                   {"m_x", m_x},
                   {"delta", d}};
  report.bounds = {{"leakage_gap", gaps.leakage},
                   {"utility_gap", gaps.utility},
                   {"radius", radius->radius},
                   {"beta", radius->beta},
                   {"c_f_ms", consts->c_f_ms},
                   {"c_f_mx", consts->c_f_mx}};
  report.probability = 1.0 - radius->beta;
  return report;
}

HolderSpec PcHolderConstants() {
  HolderSpec h;
  h.r0 = std::numeric_limits<double>::infinity();
  h.alpha = 1.0;
  h.c_l = 1.0;
  h.c_u = 1.0;
  return h;
}

absl::StatusOr<HolderSpec> FInfoHolderConstants(const FGenerator& f,
                                                double gamma) {
  if (!InUnitInterval(gamma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gamma must lie in (0,1], got ", gamma));
  }
  HolderSpec h;
  h.alpha = 1.0;
  h.c_l = 2.0 * f.SupNorm(gamma) + (2.0 / gamma + 1.0) * f.Lipschitz(gamma);
  h.c_u = h.c_l;
  h.certified = f.certified();
  return h;
}

absl::StatusOr<double> Theorem2Bound(double h_plus, double h_minus,
                                     const HolderSpec& spec, double r) {
  if (h_plus < h_minus) {
    return absl::InvalidArgumentError(absl::StrCat(
        "H(eps + c r^a) = ", h_plus, " is below H(eps - c r^a) = ", h_minus,
        "; H must be nondecreasing in eps"));
  }
  if (r < 0.0) return absl::InvalidArgumentError("radius must be >= 0");
  return h_plus - h_minus + 2.0 * spec.c_u * std::pow(r, spec.alpha);
}

absl::Status ValidatePqParameters(double p, double q) {
  if (!(p >= 0.5 && p <= 1.0) || !(q >= 0.0 && q <= 0.5) || p + q > 1.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need p in [1/2,1], q in [0,1/2], p+q <= 1; got p=", p, ", q=", q));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> Example2Put(double p, double q, double eps) {
  if (absl::Status s = ValidatePqParameters(p, q); !s.ok()) return s;
  if (!(p > q)) {
    return absl::InvalidArgumentError("closed form requires p > q");
  }
  if (eps < p || eps > 1.0 - q) {
    return absl::InvalidArgumentError(absl::StrCat(
        "eps = ", eps, " outside the closed form's range [", p, ", ", 1.0 - q,
        "]"));
  }
  const double slope = (p + q - 2.0 * p * q) / (p - q);
  return 1.0 - (1.0 - q) * slope + eps * slope;
}

absl::StatusOr<double> Example2DeltaBound(double p_hat, double q_hat,
                                          double r) {
  if (absl::Status s = ValidatePqParameters(p_hat, q_hat); !s.ok()) return s;
  if (!(p_hat > q_hat)) {
    return absl::InvalidArgumentError(
        "p_hat == q_hat: the channel is degenerate");
  }
  if (r < 0.0) return absl::InvalidArgumentError("radius must be >= 0");
  return 2.0 * p_hat * (1.0 - q_hat) / (p_hat - q_hat) * r;
}

}  // namespace putlab
