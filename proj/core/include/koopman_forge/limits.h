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

#ifndef KOOPMAN_FORGE_LIMITS_H_
#define KOOPMAN_FORGE_LIMITS_H_

#include <cstddef>
#include <string>

#include "koopman_forge/errors.h"

namespace koopman_forge {

inline constexpr int kDefaultMaxLevel = 16;
inline constexpr std::size_t kDefaultMaxPieces = std::size_t{1} << 22;

// Caps on the size of exact objects. A 2^n x 2^n rational matrix grows
// quadratically in 2^n, so the dyadic level is the main knob.
struct ResourceLimits {
  int max_level = kDefaultMaxLevel;
  std::size_t max_pieces = kDefaultMaxPieces;

  void CheckLevel(int level) const {
    if (level < 0) {
      throw ValidationError("dyadic level must be nonnegative, got " +
                            std::to_string(level));
    }
    if (level > max_level) {
      throw ResourceError("dyadic level " + std::to_string(level) +
                          " exceeds the resource limit " +
                          std::to_string(max_level));
    }
  }

  void CheckPieces(std::size_t pieces) const {
    if (pieces > max_pieces) {
      throw ResourceError("piece count " + std::to_string(pieces) +
                          " exceeds the resource limit " +
                          std::to_string(max_pieces));
    }
  }
};

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_LIMITS_H_
