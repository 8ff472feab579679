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

#include <nlohmann/json.hpp>

#include "koopman_forge/errors.h"
#include "koopman_forge/json_io.h"
#include "koopman_forge/koopman.h"
#include "koopman_forge/realize.h"
#include "test_support.h"

namespace koopman_forge {
namespace {

using nlohmann::json;
using testing::Rng;

TEST(JsonIoTest, RatFormat) {
  EXPECT_EQ(ToJson(Rat(3, 4)), "3/4");
  EXPECT_EQ(ToJson(Rat(-1, 2)), "-1/2");
  EXPECT_EQ(ToJson(Rat(1)), "1/1");
  EXPECT_EQ(RatFromJson("1"), Rat(1));
  EXPECT_EQ(RatFromJson("6/8"), Rat(3, 4));
  EXPECT_THROW(RatFromJson(json(0.5)), ValidationError);
  EXPECT_THROW(RatFromJson(json(1)), ValidationError);
  EXPECT_THROW(RatFromJson("1/0"), ValidationError);
}

TEST(JsonIoTest, StepFunctionSchema) {
  const json j = json::parse(R"({"breakpoints": ["0", "1/2", "1"], "values": ["1", "-1"]})");
  EXPECT_EQ(StepFunctionFromJson(j), StepFunction::Rademacher());
  EXPECT_EQ(ToJson(StepFunction::Rademacher()),
            json::parse(R"({"breakpoints": ["0/1", "1/2", "1/1"], "values": ["1/1", "-1/1"]})"));
  EXPECT_THROW(StepFunctionFromJson(json::parse(R"({"breakpoints": ["0", "1"]})")),
               ValidationError);
  EXPECT_THROW(
      StepFunctionFromJson(json::parse(R"({"breakpoints": ["0", "1/2"], "values": ["1"]})")),
      ValidationError);
}

TEST(JsonIoTest, MapsRevalidateOnLoad) {
  const json swap = json::parse(R"({"pieces": [
      {"lo": "0", "hi": "1/2", "offset": "1/2"},
      {"lo": "1/2", "hi": "1", "offset": "-1/2"}]})");
  EXPECT_EQ(PiecewiseTranslationFromJson(swap), PiecewiseTranslation::HalfSwap());
  EXPECT_TRUE(std::holds_alternative<PiecewiseTranslation>(MapFromJson(swap)));

  const json collapse = json::parse(R"({"pieces": [
      {"lo": "0", "hi": "1/2", "offset": "0"},
      {"lo": "1/2", "hi": "1", "offset": "-1/2"}]})");
  EXPECT_THROW(MapFromJson(collapse), ValidationError);

  const json doubling = ToJson(PiecewiseAffineMap::Doubling());
  EXPECT_EQ(PiecewiseAffineMapFromJson(doubling), PiecewiseAffineMap::Doubling());
  EXPECT_TRUE(std::holds_alternative<PiecewiseAffineMap>(MapFromJson(doubling)));

  const json squash = json::parse(R"({"branches": [
      {"lo": "0", "hi": "1", "slope": "1/2", "intercept": "0"}]})");
  EXPECT_THROW(MapFromJson(squash), ValidationError);
  EXPECT_THROW(MapFromJson(json::parse(R"({"maps": []})")), ValidationError);
  EXPECT_THROW(MapFromJson(json::parse(R"({"pieces": 3})")), ValidationError);
}

TEST(JsonIoTest, MatrixSchema) {
  const json j = json::parse(R"({"n": 1, "entries": [["1/2", "1/2"], ["1/2", "1/2"]]})");
  const Rat h(1, 2);
  EXPECT_EQ(MatrixFromJson(j), DoublyStochasticMatrix({{h, h}, {h, h}}));
  EXPECT_THROW(MatrixFromJson(json::parse(R"({"n": 2, "entries": [["1", "0"], ["0", "1"]]})")),
               ValidationError);
  EXPECT_THROW(MatrixFromJson(json::parse(R"({"entries": [["1", "1"], ["0", "0"]]})")),
               ValidationError);
  EXPECT_THROW(MatrixFromJson(json::parse(R"({"entries": [["1"], ["1"]]})")), ValidationError);
}

TEST(JsonIoProperty, SerializationIsAFixedPoint) {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const StepFunction f = testing::RandomStepFunction(rng);
    EXPECT_EQ(ToJson(StepFunctionFromJson(ToJson(f))), ToJson(f));
    const PiecewiseTranslation t = testing::RandomTranslation(rng);
    EXPECT_EQ(ToJson(PiecewiseTranslationFromJson(ToJson(t))), ToJson(t));
    const PiecewiseAffineMap a = testing::RandomLurothMap(rng);
    EXPECT_EQ(ToJson(PiecewiseAffineMapFromJson(ToJson(a))), ToJson(a));
    const DoublyStochasticMatrix m = testing::RandomBirkhoff(rng, 2);
    EXPECT_EQ(MatrixFromJson(ToJson(m)), m);
    EXPECT_EQ(ToJson(MatrixFromJson(json::parse(ToJson(m).dump()))), ToJson(m));
  }
}

}  // namespace
}  // namespace koopman_forge
