// Copyright 2026 The Koopman Forge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "koopman_forge/errors.h"
#include "koopman_forge/koopman.h"
#include "koopman_forge/realize.h"
#include "koopman_forge/transforms.h"
#include "oracles.h"
#include "test_support.h"

namespace koopman_forge {
namespace {

using testing::ExampleMaps;
using testing::GridFlowMatrix;
using testing::GridSamples;
using testing::GridTransfer;
using testing::RandomAffineMap;
using testing::RandomNonnegativeStepFunction;
using testing::RandomStepFunction;
using testing::RandomTranslation;
using testing::Rng;

StepFunction Ind(const Rat& lo, const Rat& hi) {
  return StepFunction::Indicator(Interval(lo, hi));
}

DoublyStochasticMatrix M(std::vector<std::vector<Rat>> rows) {
  return DoublyStochasticMatrix(rows);
}

bool IsDyadic(const std::string& name) {
  return name != "rotation 1/3" && name != "luroth" && name != "tripling";
}

std::vector<Rat> Flatten(const DoublyStochasticMatrix& m) {
  std::vector<Rat> out;
  for (const auto& row : m.Rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

TEST(KoopmanMatrixTest, Examples) {
  const Rat h(1, 2);
  EXPECT_EQ(KoopmanMatrix(PiecewiseAffineMap::Identity(), 1), M({{1, 0}, {0, 1}}));
  EXPECT_EQ(GridFlowMatrix(PiecewiseAffineMap::Doubling(), 1, 6),
            (std::vector<Rat>{h, h, h, h}));
  EXPECT_EQ(KoopmanMatrix(PiecewiseAffineMap::Doubling(), 1), M({{h, h}, {h, h}}));
  EXPECT_EQ(KoopmanMatrix(PiecewiseTranslation::HalfSwap(), 1), M({{0, 1}, {1, 0}}));
  EXPECT_EQ(GridFlowMatrix(PiecewiseAffineMap::Tent(), 1, 6),
            (std::vector<Rat>{h, h, h, h}));
  EXPECT_EQ(KoopmanMatrix(PiecewiseAffineMap::Tent(), 1), M({{h, h}, {h, h}}));
  EXPECT_EQ(KoopmanMatrix(PiecewiseAffineMap::Identity(), 3),
            DoublyStochasticMatrix::Identity(3));
}

TEST(KoopmanMatrixTest, MatchesGridOracle) {
  for (const auto& [name, map] : ExampleMaps()) {
    if (!IsDyadic(name)) continue;
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(Flatten(KoopmanMatrix(map, n)), GridFlowMatrix(map, n, n + 3))
          << name << " level " << n;
    }
  }
}

TEST(KoopmanMatrixTest, ResourceLimit) {
  EXPECT_THROW(KoopmanMatrix(PiecewiseAffineMap::Doubling(), 4, {.max_level = 3}),
               ResourceError);
}

TEST(KoopmanMatrixProperty, OrientationMatchesKoopmanInnerProducts) {
  Rng rng(41);
  std::vector<testing::NamedMap> maps = ExampleMaps();
  for (int i = 0; i < 10; ++i) maps.push_back({"random", RandomAffineMap(rng)});
  for (const auto& [name, map] : maps) {
    for (int n = 0; n <= 3; ++n) {
      const DoublyStochasticMatrix m = KoopmanMatrix(map, n);
      for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t k = 0; k < m.size(); ++k) {
          const auto jj = static_cast<std::int64_t>(j);
          const auto kk = static_cast<std::int64_t>(k);
          EXPECT_EQ(m.BlockMass(j, k),
                    StepInner(KoopmanApply(map, StepFunction::DyadicIndicator(n, kk)),
                              StepFunction::DyadicIndicator(n, jj)))
              << name;
        }
      }
    }
  }
}

TEST(TransferApplyTest, Examples) {
  Rng rng(42);
  const PiecewiseTranslation t = RandomTranslation(rng);
  const StepFunction f = RandomStepFunction(rng);
  EXPECT_EQ(TransferApply(t, f), KoopmanApply(Invert(t), f));

  const auto doubling = PiecewiseAffineMap::Doubling();
  const StepFunction r = StepFunction::Rademacher();
  EXPECT_EQ(GridTransfer(doubling, r, 6), GridSamples(StepFunction(), 6));
  EXPECT_TRUE(TransferApply(doubling, r).IsZero());
  EXPECT_EQ(TransferApply(doubling, StepFunction::Constant(1)), StepFunction::Constant(1));

  const StepFunction quarter = Ind(0, Rat(1, 4));
  EXPECT_EQ(GridTransfer(doubling, quarter, 6),
            GridSamples(Ind(0, Rat(1, 2)) * Rat(1, 2), 6));
  EXPECT_EQ(TransferApply(doubling, quarter), Ind(0, Rat(1, 2)) * Rat(1, 2));
}

TEST(TransferApplyTest, MatchesGridOracle) {
  Rng rng(43);
  for (const auto& [name, map] : ExampleMaps()) {
    if (!IsDyadic(name)) continue;
    for (int i = 0; i < 10; ++i) {
      StepFunction f;
      for (int k = 0; k < 4; ++k) {
        f += StepFunction::DyadicIndicator(3, testing::Uniform(rng, 0, 7)) *
             testing::RandomRat(rng);
      }
      EXPECT_EQ(GridSamples(TransferApply(map, f), 8), GridTransfer(map, f, 8)) << name;
    }
  }
}

TEST(TransferApplyProperty, AdjointPositivityAndUnit) {
  Rng rng(44);
  const StepFunction one = StepFunction::Constant(1);
  for (int i = 0; i < 200; ++i) {
    const PiecewiseAffineMap map = RandomAffineMap(rng);
    const StepFunction f = RandomStepFunction(rng);
    const StepFunction g = RandomStepFunction(rng);
    EXPECT_EQ(StepInner(TransferApply(map, f), g), StepInner(f, KoopmanApply(map, g)));
    EXPECT_EQ(TransferApply(map, one), one);
    EXPECT_EQ(KoopmanApply(map, one), one);
    EXPECT_TRUE(TransferApply(map, RandomNonnegativeStepFunction(rng)).IsNonnegative());
    // T* T = I for an isometry.
    EXPECT_EQ(TransferApply(map, KoopmanApply(map, f)), f);
  }
}

TEST(RangeDistanceTest, Examples) {
  Rng rng(45);
  const auto doubling = PiecewiseAffineMap::Doubling();
  EXPECT_EQ(RangeDistanceSquared(RandomTranslation(rng), RandomStepFunction(rng)), 0);
  EXPECT_EQ(RangeDistanceSquared(doubling, StepFunction::Rademacher()), 1);

  const StepFunction quarter = Ind(0, Rat(1, 4));
  EXPECT_EQ(testing::ProjectionRangeDistanceSquared(doubling, quarter, 8, 10), Rat(1, 8));
  EXPECT_EQ(RangeDistanceSquared(doubling, quarter), Rat(1, 8));
}

TEST(RangeDistanceTest, MatchesProjectionOracle) {
  Rng rng(46);
  for (const auto& [name, map] : ExampleMaps()) {
    if (!IsDyadic(name)) continue;
    for (int i = 0; i < 5; ++i) {
      StepFunction f;
      for (int k = 0; k < 3; ++k) {
        f += StepFunction::DyadicIndicator(3, testing::Uniform(rng, 0, 7)) *
             testing::RandomRat(rng);
      }
      EXPECT_EQ(RangeDistanceSquared(map, f),
                testing::ProjectionRangeDistanceSquared(map, f, 6, 8))
          << name;
    }
  }
}

TEST(RangeDistanceProperty, RangeElementsHaveZeroDistance) {
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const PiecewiseAffineMap map = RandomAffineMap(rng);
    const StepFunction g = RandomStepFunction(rng);
    EXPECT_EQ(RangeDistanceSquared(map, KoopmanApply(map, g)), 0);
    EXPECT_GE(RangeDistanceSquared(map, g), 0);
    EXPECT_EQ(RangeDistanceSquared(RandomTranslation(rng), g), 0);
  }
}

TEST(WeakDefectTest, Examples) {
  const auto doubling = PiecewiseAffineMap::Doubling();
  EXPECT_EQ(WeakDefect(doubling, doubling, 4), 0);
  EXPECT_EQ(WeakDefect(PiecewiseAffineMap::Identity(), PiecewiseTranslation::HalfSwap(), 1),
            1);
  for (int n = 1; n <= 4; ++n) {
    const PiecewiseTranslation t = RealizeIet(KoopmanMatrix(doubling, n));
    EXPECT_EQ(WeakDefect(t, doubling, n), 0);
  }
  EXPECT_THROW(WeakDefect(DoublyStochasticMatrix::Identity(1),
                          DoublyStochasticMatrix::Identity(2)),
               ValidationError);
}

TEST(WeakDefectProperty, AgreementDescendsToCoarserLevels) {
  Rng rng(48);
  for (int i = 0; i < 20; ++i) {
    const PiecewiseAffineMap s = RandomAffineMap(rng);
    const int n = static_cast<int>(testing::Uniform(rng, 1, 4));
    const PiecewiseTranslation t = RealizeIet(KoopmanMatrix(s, n));
    ASSERT_EQ(WeakDefect(t, s, n), 0);
    for (int m = 0; m < n; ++m) EXPECT_EQ(WeakDefect(t, s, m), 0);
  }
}

TEST(MetricBasisTest, DefaultDyadicFamily) {
  const MetricBasis basis = MetricBasis::DyadicIndicators();
  EXPECT_EQ(basis.size(), 127u);
  EXPECT_EQ(basis.labels().front(), "dyadic:1:0");
  EXPECT_EQ(basis.labels()[1], "dyadic:1:1");
  EXPECT_EQ(basis.labels().back(), "dyadic:64:6");
  EXPECT_EQ(basis.norms_squared()[2], Rat(1, 2));
  EXPECT_DOUBLE_EQ(basis.TailBound(), std::ldexp(2.0, -127));
  EXPECT_EQ(MetricBasis::DyadicIndicators(5).size(), 63u);
  EXPECT_THROW(MetricBasis({StepFunction()}), ValidationError);
}

TEST(OpMetricTest, IdentityVersusHalfSwapAtLevelOne) {
  const MetricBasis basis = MetricBasis::DyadicIndicators(1);
  const PiecewiseAffineMap id = PiecewiseAffineMap::Identity();
  const PiecewiseAffineMap swap = PiecewiseTranslation::HalfSwap();

  // Independent evaluation: sample f o T and f o S on a grid.
  double direct = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const StepFunction& f = basis.functions()[j];
    const Rat diff = testing::GridDistanceSquared(testing::GridKoopman(id, f, 4),
                                                  testing::GridKoopman(swap, f, 4), 4);
    direct += std::sqrt((diff / f.NormSquared()).ToDouble()) /
              std::ldexp(1.0, static_cast<int>(j + 1));
  }
  const double hand = std::sqrt(2.0) * (0.25 + 0.125);
  EXPECT_NEAR(direct, hand, 1e-15);

  const MetricReport report = OpMetric(id, swap, basis);
  ASSERT_EQ(report.terms.size(), 3u);
  EXPECT_EQ(report.terms[0].diff_squared, 0);
  EXPECT_EQ(report.terms[1].diff_squared, 1);
  EXPECT_EQ(report.terms[1].norm_squared, Rat(1, 2));
  EXPECT_EQ(report.terms[2].diff_squared, 1);
  EXPECT_NEAR(report.value, hand, 1e-15);
  EXPECT_DOUBLE_EQ(report.tail_bound, 0.25);
}

TEST(OpMetricProperty, PseudometricAxioms) {
  Rng rng(49);
  const MetricBasis basis = MetricBasis::DyadicIndicators(3);
  for (int i = 0; i < 40; ++i) {
    const PiecewiseAffineMap a = RandomAffineMap(rng);
    const PiecewiseAffineMap b = RandomAffineMap(rng);
    const PiecewiseAffineMap c = RandomAffineMap(rng);
    const MetricReport ab = OpMetric(a, b, basis);
    const MetricReport ba = OpMetric(b, a, basis);
    EXPECT_EQ(OpMetric(a, a, basis).value, 0.0);
    EXPECT_GE(ab.value, 0.0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      EXPECT_EQ(ab.terms[j].diff_squared, ba.terms[j].diff_squared);
    }
    EXPECT_EQ(ab.value, ba.value);
    EXPECT_LE(ab.value, OpMetric(a, c, basis).value + OpMetric(c, b, basis).value + 1e-12);
  }
}

}  // namespace
}  // namespace koopman_forge
