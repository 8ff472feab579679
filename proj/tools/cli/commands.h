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

#ifndef KOOPMAN_FORGE_TOOLS_CLI_COMMANDS_H_
#define KOOPMAN_FORGE_TOOLS_CLI_COMMANDS_H_

#include <ostream>

namespace koopman_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

// Runs the koopman-forge command line. Primary output (JSON or tables) goes
// to `out` unless --out is given; diagnostics go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace koopman_forge::cli

#endif  // KOOPMAN_FORGE_TOOLS_CLI_COMMANDS_H_
