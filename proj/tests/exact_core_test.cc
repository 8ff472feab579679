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

#include "koopman_forge/errors.h"
#include "koopman_forge/interval.h"
#include "koopman_forge/rat.h"
#include "koopman_forge/step_function.h"
#include "test_support.h"

namespace koopman_forge {
namespace {

using testing::RandomRat;
using testing::RandomStepFunction;
using testing::Rng;

StepFunction Ind(const Rat& lo, const Rat& hi) {
  return StepFunction::Indicator(Interval(lo, hi));
}

TEST(RatTest, LowestTermsWithPositiveDenominator) {
  const Rat r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.ToString(), "-3/4");
  EXPECT_EQ(Rat(0).ToString(), "0/1");
  EXPECT_EQ(Rat(1).ToString(), "1/1");
}

TEST(RatTest, ParsesFractionsAndIntegerShorthand) {
  EXPECT_EQ(Rat::Parse("3/4"), Rat(3, 4));
  EXPECT_EQ(Rat::Parse("-1/2"), Rat(-1, 2));
  EXPECT_EQ(Rat::Parse("1"), Rat(1));
  EXPECT_EQ(Rat::Parse("4/8"), Rat(1, 2));
  EXPECT_EQ(Rat::Parse("123456789012345678901234567890/2").numerator().get_str(),
            "61728394506172839450617283945");
}

TEST(RatTest, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a/b", "1.5", "1/-2", " 1/2", "1//2"}) {
    EXPECT_THROW(Rat::Parse(bad), ValidationError) << bad;
  }
  EXPECT_THROW(Rat(1, 0), ValidationError);
  EXPECT_THROW(Rat(1) / Rat(0), ValidationError);
}

TEST(RatTest, FloorCeilAndPow2) {
  EXPECT_EQ(Rat(-1, 2).Floor(), -1);
  EXPECT_EQ(Rat(-1, 2).Ceil(), 0);
  EXPECT_EQ(Rat(7, 2).Floor(), 3);
  EXPECT_EQ(Rat(3).Ceil(), 3);
  EXPECT_EQ(Rat::Pow2(-3), Rat(1, 8));
  EXPECT_EQ(Rat::Pow2(4), Rat(16));
}

TEST(RatTest, ArithmeticRoundTripsOnRandomInputs) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rat a = RandomRat(rng, 1000, 97);
    const Rat b = RandomRat(rng, 1000, 97);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a < b, (a - b).sign() < 0);
    EXPECT_EQ(Rat::Parse(a.ToString()), a);
  }
}

TEST(DyadicPartitionTest, SmallLevels) {
  EXPECT_EQ(DyadicPartition(0), (std::vector<Interval>{Interval(0, 1)}));
  EXPECT_EQ(DyadicPartition(1),
            (std::vector<Interval>{Interval(0, Rat(1, 2)), Interval(Rat(1, 2), 1)}));
  EXPECT_EQ(DyadicPartition(2),
            (std::vector<Interval>{Interval(0, Rat(1, 4)), Interval(Rat(1, 4), Rat(1, 2)),
                                   Interval(Rat(1, 2), Rat(3, 4)),
                                   Interval(Rat(3, 4), 1)}));
}

TEST(DyadicPartitionTest, TilesAndRefines) {
  for (int n = 0; n <= 8; ++n) {
    const auto coarse = DyadicPartition(n);
    const auto fine = DyadicPartition(n + 1);
    ASSERT_EQ(coarse.size(), std::size_t{1} << n);
    EXPECT_TRUE(TilesUnitInterval(coarse));
    Rat total = 0;
    for (const Interval& i : coarse) total += i.length();
    EXPECT_EQ(total, 1);
    for (std::size_t j = 0; j < coarse.size(); ++j) {
      EXPECT_EQ(fine[2 * j].lo(), coarse[j].lo());
      EXPECT_EQ(fine[2 * j].hi(), fine[2 * j + 1].lo());
      EXPECT_EQ(fine[2 * j + 1].hi(), coarse[j].hi());
    }
  }
}

TEST(DyadicPartitionTest, ResourceLimit) {
  EXPECT_THROW(DyadicPartition(17), ResourceError);
  EXPECT_THROW(DyadicPartition(3, ResourceLimits{.max_level = 2}), ResourceError);
  EXPECT_THROW(DyadicPartition(-1), ValidationError);
}

TEST(IntervalTest, RejectsOutOfRange) {
  EXPECT_THROW(Interval(Rat(1, 2), Rat(1, 4)), ValidationError);
  EXPECT_THROW(Interval(Rat(-1, 4), Rat(1, 4)), ValidationError);
  EXPECT_THROW(Interval(0, Rat(5, 4)), ValidationError);
  EXPECT_TRUE(Interval(Rat(1, 3), Rat(1, 3)).empty());
}

TEST(StepFunctionTest, ValidatesConstruction) {
  EXPECT_THROW(StepFunction({Rat(0), Rat(1, 2)}, {Rat(1)}), ValidationError);
  EXPECT_THROW(StepFunction({Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)},
                            {Rat(1), Rat(2), Rat(3)}),
               ValidationError);
  EXPECT_THROW(StepFunction({Rat(0), Rat(1)}, {Rat(1), Rat(2)}), ValidationError);
  EXPECT_THROW(StepFunction::Rademacher().Evaluate(Rat(1)), DomainError);
}

TEST(StepFunctionTest, InnerProductExamples) {
  const StepFunction one = StepFunction::Constant(1);
  EXPECT_EQ(StepInner(one, one), 1);
  EXPECT_EQ(StepInner(Ind(0, Rat(1, 2)), Ind(Rat(1, 4), 1)), Rat(1, 4));
  const StepFunction r = Ind(0, Rat(1, 2)) - Ind(Rat(1, 2), 1);
  EXPECT_EQ(r, StepFunction::Rademacher());
  EXPECT_EQ(StepInner(r, r), 1);
}

TEST(StepFunctionTest, DistanceExamples) {
  Rng rng(3);
  const StepFunction f = RandomStepFunction(rng);
  EXPECT_EQ(StepL2Dist(f, f).squared, 0);
  EXPECT_EQ(StepL2Dist(StepFunction::Constant(1), StepFunction()).squared, 1);
  EXPECT_DOUBLE_EQ(StepL2Dist(StepFunction::Constant(1), StepFunction()).value, 1.0);
  const L2Distance d = StepL2Dist(Ind(0, Rat(1, 2)), Ind(Rat(1, 2), 1));
  EXPECT_EQ(d.squared, 1);
  EXPECT_DOUBLE_EQ(d.value, 1.0);
}

TEST(StepFunctionTest, CanonicalFormMergesEqualNeighbours) {
  const StepFunction f({Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)}, {Rat(2), Rat(2), Rat(0)});
  const StepFunction c = f.Canonical();
  EXPECT_EQ(c.breakpoints(), (std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)}));
  EXPECT_EQ(c.values(), (std::vector<Rat>{Rat(2), Rat(0)}));
  EXPECT_EQ(f, c);
  EXPECT_EQ(Ind(0, 1), StepFunction::Constant(1));
}

TEST(StepFunctionProperty, InnerIsSymmetricBilinearAndPositive) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = RandomStepFunction(rng);
    const StepFunction g = RandomStepFunction(rng);
    const StepFunction h = RandomStepFunction(rng);
    const Rat a = RandomRat(rng);
    EXPECT_EQ(StepInner(f, g), StepInner(g, f));
    EXPECT_EQ(StepInner(f * a + g, h), a * StepInner(f, h) + StepInner(g, h));
    EXPECT_GE(StepInner(f, f), 0);
    EXPECT_EQ(StepInner(f, f).is_zero(), f.Canonical().IsZero());
    EXPECT_EQ(StepInner(f, f), f.NormSquared());
    EXPECT_EQ(StepL2Dist(f, g).squared, (f - g).NormSquared());
  }
  EXPECT_EQ(StepInner(StepFunction(), StepFunction()), 0);
}

TEST(StepFunctionProperty, CanonicalizationIsIdempotentAndPreservesInner) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    // Sums of indicators produce equal neighbours often.
    StepFunction f = RandomStepFunction(rng) * Rat(0);
    for (int k = 0; k < 3; ++k) {
      f += StepFunction::DyadicIndicator(2, testing::Uniform(rng, 0, 3));
    }
    const StepFunction c = f.Canonical();
    const StepFunction cc = c.Canonical();
    EXPECT_EQ(c.breakpoints(), cc.breakpoints());
    EXPECT_EQ(c.values(), cc.values());
    const StepFunction g = RandomStepFunction(rng);
    EXPECT_EQ(StepInner(f, g), StepInner(c, g));
  }
}

}  // namespace
}  // namespace koopman_forge
