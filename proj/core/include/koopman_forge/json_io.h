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

#ifndef KOOPMAN_FORGE_JSON_IO_H_
#define KOOPMAN_FORGE_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "koopman_forge/doubly_stochastic_matrix.h"
#include "koopman_forge/piecewise_affine_map.h"
#include "koopman_forge/piecewise_translation.h"
#include "koopman_forge/rat.h"
#include "koopman_forge/step_function.h"
#include "koopman_forge/transforms.h"

// JSON schemas:
//   Rat                   "p/q" (input also accepts "p")
//   StepFunction          {"breakpoints": [Rat...], "values": [Rat...]}
//   PiecewiseTranslation  {"pieces": [{"lo", "hi", "offset"}...]}
//   PiecewiseAffineMap    {"branches": [{"lo", "hi", "slope", "intercept"}...]}
//   DoublyStochasticMatrix {"n": level, "entries": [[Rat...]...]}
//
// Every reader re-validates the type invariants and reports malformed input
// as ValidationError.
namespace koopman_forge {

nlohmann::json ToJson(const Rat& r);
nlohmann::json ToJson(const StepFunction& f);
nlohmann::json ToJson(const PiecewiseTranslation& t);
nlohmann::json ToJson(const PiecewiseAffineMap& m);
nlohmann::json ToJson(const DoublyStochasticMatrix& m);
nlohmann::json ToJson(const MeasurePreservingMap& m);

Rat RatFromJson(const nlohmann::json& j);
StepFunction StepFunctionFromJson(const nlohmann::json& j);
PiecewiseTranslation PiecewiseTranslationFromJson(const nlohmann::json& j);
PiecewiseAffineMap PiecewiseAffineMapFromJson(const nlohmann::json& j);
DoublyStochasticMatrix MatrixFromJson(const nlohmann::json& j);
// Dispatches on the presence of "pieces" or "branches".
MeasurePreservingMap MapFromJson(const nlohmann::json& j);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_JSON_IO_H_
