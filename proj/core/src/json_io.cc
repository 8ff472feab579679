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

#include "koopman_forge/json_io.h"

#include <string>
#include <utility>
#include <vector>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("JSON object is missing field \"") + key +
                          "\"");
  }
  return j.at(key);
}

const json& Array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ValidationError(std::string(what) + " must be a JSON array");
  }
  return j;
}

std::vector<Rat> RatList(const json& j, const char* what) {
  std::vector<Rat> out;
  for (const json& e : Array(j, what)) out.push_back(RatFromJson(e));
  return out;
}

}  // namespace

json ToJson(const Rat& r) { return r.ToString(); }

json ToJson(const StepFunction& f) {
  json breakpoints = json::array();
  json values = json::array();
  for (const Rat& b : f.breakpoints()) breakpoints.push_back(ToJson(b));
  for (const Rat& v : f.values()) values.push_back(ToJson(v));
  return {{"breakpoints", std::move(breakpoints)}, {"values", std::move(values)}};
}

json ToJson(const PiecewiseTranslation& t) {
  json pieces = json::array();
  for (const TranslationPiece& p : t.pieces()) {
    pieces.push_back({{"lo", ToJson(p.source.lo())},
                      {"hi", ToJson(p.source.hi())},
                      {"offset", ToJson(p.offset)}});
  }
  return {{"pieces", std::move(pieces)}};
}

json ToJson(const PiecewiseAffineMap& m) {
  json branches = json::array();
  for (const AffineBranch& b : m.branches()) {
    branches.push_back({{"lo", ToJson(b.source.lo())},
                        {"hi", ToJson(b.source.hi())},
                        {"slope", ToJson(b.slope)},
                        {"intercept", ToJson(b.intercept)}});
  }
  return {{"branches", std::move(branches)}};
}

json ToJson(const DoublyStochasticMatrix& m) {
  json rows = json::array();
  for (std::size_t j = 0; j < m.size(); ++j) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(ToJson(m(j, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.level()}, {"entries", std::move(rows)}};
}

json ToJson(const MeasurePreservingMap& m) {
  return std::visit([](const auto& map) { return ToJson(map); }, m);
}

Rat RatFromJson(const json& j) {
  if (!j.is_string()) {
    throw ValidationError("rational must be a string \"p/q\", got " + j.dump());
  }
  return Rat::Parse(j.get<std::string>());
}

StepFunction StepFunctionFromJson(const json& j) {
  return StepFunction(RatList(Field(j, "breakpoints"), "breakpoints"),
                      RatList(Field(j, "values"), "values"));
}

PiecewiseTranslation PiecewiseTranslationFromJson(const json& j) {
  std::vector<TranslationPiece> pieces;
  for (const json& p : Array(Field(j, "pieces"), "pieces")) {
    pieces.push_back(TranslationPiece{
        Interval(RatFromJson(Field(p, "lo")), RatFromJson(Field(p, "hi"))),
        RatFromJson(Field(p, "offset"))});
  }
  return PiecewiseTranslation(std::move(pieces));
}

PiecewiseAffineMap PiecewiseAffineMapFromJson(const json& j) {
  std::vector<AffineBranch> branches;
  for (const json& b : Array(Field(j, "branches"), "branches")) {
    branches.push_back(AffineBranch{
        Interval(RatFromJson(Field(b, "lo")), RatFromJson(Field(b, "hi"))),
        RatFromJson(Field(b, "slope")), RatFromJson(Field(b, "intercept"))});
  }
  return PiecewiseAffineMap(std::move(branches));
}

DoublyStochasticMatrix MatrixFromJson(const json& j) {
  std::vector<std::vector<Rat>> rows;
  for (const json& row : Array(Field(j, "entries"), "entries")) {
    rows.push_back(RatList(row, "matrix row"));
  }
  DoublyStochasticMatrix m(rows);
  if (j.contains("n")) {
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<int>() != m.level()) {
      throw ValidationError("matrix field \"n\" does not match its 2^n x 2^n size");
    }
  }
  return m;
}

MeasurePreservingMap MapFromJson(const json& j) {
  if (j.is_object() && j.contains("pieces")) return PiecewiseTranslationFromJson(j);
  if (j.is_object() && j.contains("branches")) return PiecewiseAffineMapFromJson(j);
  throw ValidationError("map JSON needs a \"pieces\" or \"branches\" field");
}

}  // namespace koopman_forge
