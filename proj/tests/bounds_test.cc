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

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "putlab/bounds.h"
#include "putlab/f_generator.h"
#include "putlab/info_measures.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"
#include "putlab/random.h"

namespace putlab {
namespace {

double MinOf(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

TEST(GapConstantsTest, TotalVariation) {
  const FGenerator tv = FGenerator::TotalVariation();
  const Lemma1Constants c = *ComputeLemma1Constants(tv, 0.25, 0.25, 0.25);
  EXPECT_DOUBLE_EQ(c.a_f, 12.0);
  for (double g : {0.5, 0.25, 0.1}) {
    const Lemma1Constants e = *ComputeLemma1Constants(tv, g, g, g);
    EXPECT_NEAR(e.c_f_ms, 4.0 / g - 1.0, 1e-12);
    EXPECT_LE(e.c_f_ms, 4.0 / g + 1.0);
  }
}

TEST(GapConstantsTest, ChiSquared) {
  const FGenerator chi2 = FGenerator::ChiSquared();
  for (double g : {0.5, 0.25, 0.1}) {
    const Lemma1Constants e = *ComputeLemma1Constants(chi2, g, g, g);
    EXPECT_NEAR(e.c_f_mx, 6.0 / (g * g) + 2.0 / g - 2.0, 1e-9);
    EXPECT_LE(e.c_f_mx, 8.0 / (g * g));
  }
}

TEST(GapConstantsTest, RejectsOutOfRangeMasses) {
  const FGenerator tv = FGenerator::TotalVariation();
  EXPECT_FALSE(ComputeLemma1Constants(tv, 0.0, 0.5, 0.5).ok());
  EXPECT_FALSE(ComputeLemma1Constants(tv, 0.5, 1.5, 0.5).ok());
}

TEST(GapBoundsTest, SmallMassBranchHandExample) {
  const Lemma1Constants c =
      *ComputeLemma1Constants(FGenerator::TotalVariation(), 0.3, 0.2, 0.25);
  const double b = 3.0 + 2.0 * (1.0 / 0.3 - 1.0) + (2.0 / 0.3 + 1.0);
  EXPECT_NEAR(c.b_f_delta, b, 1e-12);
  const GapBounds g = Lemma1Bounds(c, 2, 2, 0.1);
  EXPECT_TRUE(g.leakage_small_mass_case);
  EXPECT_NEAR(g.leakage, 12.0 * 2.0 * 0.3 + b * 0.1, 1e-12);
}

TEST(GapBoundsTest, LargeMassBranch) {
  const Lemma1Constants c =
      *ComputeLemma1Constants(FGenerator::TotalVariation(), 0.2, 0.3, 0.25);
  const GapBounds g = Lemma1Bounds(c, 2, 2, 0.1);
  EXPECT_FALSE(g.leakage_small_mass_case);
  EXPECT_FALSE(g.utility_small_mass_case);
  EXPECT_NEAR(g.leakage, c.c_f_ms * 0.1, 1e-15);
  EXPECT_NEAR(g.utility, c.c_f_mx * 0.1, 1e-15);
  const GapBounds zero = Lemma1Bounds(c, 2, 2, 0.0);
  EXPECT_EQ(zero.leakage, 0.0);
  EXPECT_EQ(zero.utility, 0.0);
}

TEST(GapBoundsTest, RealizedGapsStayBelowBounds) {
  for (uint64_t t = 0; t < 300; ++t) {
    Rng rng(21, t);
    const size_t ns = 2 + rng.UniformIndex(2);
    const size_t nx = 2 + rng.UniformIndex(2);
    const JointPmf p1 = RandomJointPmf(rng, ns, nx);
    const JointPmf p2 = RandomJointPmf(rng, ns, nx);
    const Mechanism m = RandomMechanism(rng, p1.col_alphabet(), nx + 1);
    const double m_s = std::min(MinOf(Marginal(p1, Axis::kRow)),
                                MinOf(Marginal(p2, Axis::kRow)));
    const double m_x = std::min(MinOf(Marginal(p1, Axis::kCol)),
                                MinOf(Marginal(p2, Axis::kCol)));
    const double l1 = *L1Distance(p1, p2);
    for (const FGenerator& f : BuiltinGenerators()) {
      const double dl =
          std::abs(FInformation(f, PushThroughKeepS(p1.p(), m.rows())) -
                   FInformation(f, PushThroughKeepS(p2.p(), m.rows())));
      const double du =
          std::abs(FInformation(f, PushThroughKeepX(p1.p(), m.rows())) -
                   FInformation(f, PushThroughKeepX(p2.p(), m.rows())));
      for (double delta : {m_x, 0.5 * m_x, std::min(1.0, 2.0 * m_x)}) {
        const GapBounds g =
            Lemma1Bounds(*ComputeLemma1Constants(f, delta, m_s, m_x), ns, nx,
                         l1);
        EXPECT_LE(dl, g.leakage + 1e-9) << f.name();
        EXPECT_LE(du, g.utility + 1e-9) << f.name();
      }
    }
  }
}

TEST(SampleSizeBoundTest, TotalVariationHandExample) {
  const BoundReport r = *Theorem1Bound(FGenerator::TotalVariation(), 1.0, 2, 2,
                                       8000, 0.25, 0.25);
  EXPECT_NEAR(*r.bound("leakage_gap"), 1.5, 1e-12);
  EXPECT_NEAR(*r.bound("utility_gap"), 1.5, 1e-12);
  EXPECT_NEAR(*r.probability, 1.0 - 3.0 * std::exp(-3.2), 1e-15);
  EXPECT_EQ(r.kind, "theorem1");
  EXPECT_EQ(r.inputs.size(), 7u);
}

TEST(SampleSizeBoundTest, RejectsLargerXMass) {
  EXPECT_FALSE(Theorem1Bound(FGenerator::TotalVariation(), 1.0, 2, 2, 100, 0.2,
                             0.3)
                   .ok());
  EXPECT_FALSE(Theorem1Bound(FGenerator::TotalVariation(), 0.9, 2, 2, 100, 0.3,
                             0.2)
                   .ok());
}

TEST(SampleSizeBoundTest, NonincreasingInSamplesAndMasses) {
  const FGenerator chi2 = FGenerator::ChiSquared();
  double prev = INFINITY;
  for (int64_t n : {100, 400, 1600, 6400}) {
    const double b =
        *Theorem1Bound(chi2, 1.0, 2, 3, n, 0.3, 0.2)->bound("leakage_gap");
    EXPECT_LT(b, prev);
    prev = b;
  }
  EXPECT_NEAR(*Theorem1Bound(chi2, 1.0, 2, 3, 100, 0.3, 0.2)
                       ->bound("utility_gap") /
                  *Theorem1Bound(chi2, 1.0, 2, 3, 200, 0.3, 0.2)
                       ->bound("utility_gap"),
              std::sqrt(2.0), 1e-12);
  EXPECT_GE(*Theorem1Bound(chi2, 1.0, 2, 3, 100, 0.3, 0.1)->bound("utility_gap"),
            *Theorem1Bound(chi2, 1.0, 2, 3, 100, 0.3, 0.2)->bound("utility_gap"));
}

TEST(HolderTest, PcConstants) {
  const HolderSpec h = PcHolderConstants();
  EXPECT_EQ(h.c_l, 1.0);
  EXPECT_EQ(h.c_u, 1.0);
  EXPECT_EQ(h.alpha, 1.0);
  EXPECT_TRUE(std::isinf(h.r0));
}

TEST(HolderTest, FInfoConstants) {
  const HolderSpec tv =
      *FInfoHolderConstants(FGenerator::TotalVariation(), 0.25);
  EXPECT_DOUBLE_EQ(tv.c_l, 15.0);
  EXPECT_LE(tv.c_l, 17.0);
  EXPECT_EQ(tv.c_l, tv.c_u);
  const HolderSpec chi2 = *FInfoHolderConstants(FGenerator::ChiSquared(), 0.5);
  EXPECT_DOUBLE_EQ(chi2.c_l, 26.0);
  EXPECT_LE(chi2.c_l, 32.0);
}

TEST(HolderTest, PcModuliHoldOnRandomTriples) {
  const MetricSpec pc = MetricSpec::ProbabilityOfCorrectGuessing();
  for (uint64_t t = 0; t < 500; ++t) {
    Rng rng(31, t);
    const JointPmf p = RandomJointPmf(rng, 3, 3);
    const JointPmf q = RandomJointPmf(rng, 3, 3);
    const Mechanism m = RandomMechanism(rng, p.col_alphabet(), 4);
    const double d = *L1Distance(p, q);
    EXPECT_LE(std::abs(*Leakage(pc, p, m) - *Leakage(pc, q, m)), d + 1e-12);
    EXPECT_LE(std::abs(*Utility(pc, p, m) - *Utility(pc, q, m)), d + 1e-12);
  }
}

TEST(HolderTest, MaxDifferenceInequality) {
  for (uint64_t t = 0; t < 500; ++t) {
    Rng rng(32, t);
    std::vector<double> a(5), b(5);
    double gap = 0.0;
    for (size_t i = 0; i < 5; ++i) {
      a[i] = rng.Uniform();
      b[i] = rng.Uniform();
      gap = std::max(gap, std::abs(a[i] - b[i]));
    }
    EXPECT_LE(std::abs(Pc(a) - Pc(b)), gap);
  }
}

TEST(RobustDegradationBoundTest, Arithmetic) {
  HolderSpec h = PcHolderConstants();
  EXPECT_NEAR(*Theorem2Bound(0.9, 0.7, h, 0.05), 0.3, 1e-15);
  EXPECT_EQ(*Theorem2Bound(0.8, 0.8, h, 0.0), 0.0);
  EXPECT_FALSE(Theorem2Bound(0.7, 0.9, h, 0.05).ok());
}

TEST(RobustDegradationBoundTest, LipschitzCurveGivesLinearBound) {
  // H(eps) = 0.3 + 1.4 eps with C_L = C_U = 1.
  const HolderSpec h = PcHolderConstants();
  const double slope = 1.4;
  const double eps = 0.7;
  const double r = 0.05;
  const double bound = *Theorem2Bound(0.3 + slope * (eps + r),
                                      0.3 + slope * (eps - r), h, r);
  EXPECT_LE(bound, 2.0 * (1.0 + slope) * r + 1e-15);
}

TEST(BinaryClosedFormTest, ClosedForm) {
  EXPECT_NEAR(*Example2Put(0.6, 0.2, 0.6), 0.72, 1e-12);
  EXPECT_NEAR(*Example2Put(0.6, 0.2, 0.7), 0.86, 1e-12);
  EXPECT_NEAR(*Example2Put(0.6, 0.2, 0.8), 1.0, 1e-12);
  EXPECT_NEAR(*Example2Put(0.75, 0.1, 0.9), 1.0, 1e-12);
  EXPECT_FALSE(Example2Put(0.6, 0.2, 0.5).ok());
  EXPECT_FALSE(Example2Put(0.6, 0.2, 0.85).ok());
  EXPECT_FALSE(Example2Put(0.4, 0.2, 0.6).ok());
}

TEST(BinaryClosedFormTest, AffineWithStatedSlope) {
  for (const auto& [p, q] : {std::pair{0.6, 0.2}, {0.75, 0.1}, {0.9, 0.05}}) {
    const double slope = (p + q - 2 * p * q) / (p - q);
    const double lo = *Example2Put(p, q, p);
    double prev = lo;
    for (int i = 1; i <= 10; ++i) {
      const double eps = p + (1 - q - p) * i / 10.0;
      const double v = *Example2Put(p, q, eps);
      EXPECT_GE(v, prev);
      EXPECT_NEAR(v, lo + slope * (eps - p), 1e-12);
      prev = v;
    }
    // The floor is the blind guess of X: max(P_X) = max(p + q - 2pq, ...).
    const double px1 = p * (1 - q) + (1 - p) * q;
    EXPECT_GE(lo, std::max(px1, 1 - px1) - 1e-12);
  }
}

TEST(BinaryClosedFormTest, DeltaBound) {
  EXPECT_NEAR(*Example2DeltaBound(0.6, 0.2, 0.1), 0.24, 1e-15);
  EXPECT_EQ(*Example2DeltaBound(0.6, 0.2, 0.0), 0.0);
  EXPECT_FALSE(Example2DeltaBound(0.5, 0.5, 0.1).ok());
  const double n = 1000;
  const double lambda = 1.0;
  EXPECT_NEAR(*Example2DeltaBound(0.6, 0.2, 4 * lambda * std::sqrt(5 / n)),
              8 * 0.6 * 0.8 / 0.4 * lambda * std::sqrt(5 / n), 1e-14);
}

}  // namespace
}  // namespace putlab
