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

#include "cli/builtins.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "koopman_forge/errors.h"
#include "koopman_forge/json_io.h"
#include "koopman_forge/piecewise_affine_map.h"
#include "koopman_forge/piecewise_translation.h"

namespace koopman_forge::cli {
namespace {

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

nlohmann::json ReadJson(const std::string& spec) {
  try {
    if (!spec.empty() && spec.front() == '{') return nlohmann::json::parse(spec);
    std::ifstream in(spec);
    if (!in) throw ValidationError("cannot open '" + spec + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("invalid JSON in '" + spec + "': " + e.what());
  }
}

}  // namespace

std::optional<MeasurePreservingMap> BuiltinMap(std::string_view name) {
  if (name == "doubling") return PiecewiseAffineMap::Doubling();
  if (name == "tent") return PiecewiseAffineMap::Tent();
  if (name == "identity") return PiecewiseTranslation::Identity();
  if (name == "halfswap") return PiecewiseTranslation::HalfSwap();
  if (name.starts_with("rotation:")) {
    return PiecewiseTranslation::Rotation(Rat::Parse(name.substr(9)));
  }
  return std::nullopt;
}

std::optional<std::vector<LabelledFunction>> BuiltinFunctions(
    std::string_view name, const ResourceLimits& limits) {
  if (name == "rademacher") {
    return std::vector<LabelledFunction>{{"rademacher", StepFunction::Rademacher()}};
  }
  if (name == "one") {
    return std::vector<LabelledFunction>{{"one", StepFunction::Constant(1)}};
  }
  if (!name.starts_with("dyadic:")) return std::nullopt;

  const std::string_view rest = name.substr(7);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    const auto max_level = ParseInt(rest);
    if (!max_level || *max_level < 0) {
      throw ValidationError("expected dyadic:L with L >= 0, got '" + std::string(name) + "'");
    }
    limits.CheckLevel(static_cast<int>(*max_level));
    std::vector<LabelledFunction> family;
    for (int level = 0; level <= *max_level; ++level) {
      for (std::int64_t j = 0; j < (std::int64_t{1} << level); ++j) {
        family.push_back({"dyadic:" + std::to_string(j + 1) + ":" + std::to_string(level),
                          StepFunction::DyadicIndicator(level, j)});
      }
    }
    return family;
  }
  const auto index = ParseInt(rest.substr(0, colon));
  const auto level = ParseInt(rest.substr(colon + 1));
  if (!index || !level || *level < 0) {
    throw ValidationError("expected dyadic:j:n, got '" + std::string(name) + "'");
  }
  limits.CheckLevel(static_cast<int>(*level));
  if (*index < 1 || *index > (std::int64_t{1} << *level)) {
    throw ValidationError("dyadic index j must lie in 1..2^n, got '" + std::string(name) +
                          "'");
  }
  return std::vector<LabelledFunction>{
      {std::string(name),
       StepFunction::DyadicIndicator(static_cast<int>(*level), *index - 1)}};
}

MeasurePreservingMap LoadMap(const std::string& spec) {
  if (auto builtin = BuiltinMap(spec)) return *std::move(builtin);
  if (spec.find_first_of("{/.") == std::string::npos &&
      !std::ifstream(spec).good()) {
    throw ValidationError("unknown builtin map '" + spec +
                          "' (expected doubling, tent, identity, halfswap, "
                          "rotation:p/q, or a JSON file)");
  }
  return MapFromJson(ReadJson(spec));
}

DoublyStochasticMatrix LoadMatrix(const std::string& spec) {
  return MatrixFromJson(ReadJson(spec));
}

std::vector<LabelledFunction> LoadFunctions(const std::string& spec,
                                            const ResourceLimits& limits) {
  if (auto builtin = BuiltinFunctions(spec, limits)) return *std::move(builtin);
  if (spec.find_first_of("{/.") == std::string::npos &&
      !std::ifstream(spec).good()) {
    throw ValidationError("unknown builtin function '" + spec +
                          "' (expected rademacher, one, dyadic:j:n, dyadic:L, "
                          "or a JSON file)");
  }
  return {{spec.front() == '{' ? "inline" : spec, StepFunctionFromJson(ReadJson(spec))}};
}

}  // namespace koopman_forge::cli
