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

#ifndef KOOPMAN_FORGE_TOOLS_CLI_BUILTINS_H_
#define KOOPMAN_FORGE_TOOLS_CLI_BUILTINS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koopman_forge/doubly_stochastic_matrix.h"
#include "koopman_forge/limits.h"
#include "koopman_forge/step_function.h"
#include "koopman_forge/transforms.h"

namespace koopman_forge::cli {

// doubling, tent, identity, halfswap, rotation:p/q. Returns nullopt for
// names that are not builtins.
std::optional<MeasurePreservingMap> BuiltinMap(std::string_view name);

struct LabelledFunction {
  std::string label;
  StepFunction function;
};

// rademacher, one, dyadic:j:n (1-based j), and the family dyadic:L (every
// dyadic indicator of levels 0..L). Returns nullopt for non-builtins.
std::optional<std::vector<LabelledFunction>> BuiltinFunctions(
    std::string_view name, const ResourceLimits& limits);

// Resolves a builtin name, an inline JSON object (text starting with '{'),
// or a path to a JSON file. Throws ValidationError on anything else.
MeasurePreservingMap LoadMap(const std::string& spec);
DoublyStochasticMatrix LoadMatrix(const std::string& spec);
std::vector<LabelledFunction> LoadFunctions(const std::string& spec,
                                            const ResourceLimits& limits);

}  // namespace koopman_forge::cli

#endif  // KOOPMAN_FORGE_TOOLS_CLI_BUILTINS_H_
