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

#ifndef KOOPMAN_FORGE_PIECEWISE_TRANSLATION_H_
#define KOOPMAN_FORGE_PIECEWISE_TRANSLATION_H_

#include <ostream>
#include <vector>

#include "koopman_forge/interval.h"
#include "koopman_forge/rat.h"

namespace koopman_forge {

struct TranslationPiece {
  Interval source;
  Rat offset;

  Interval image() const {
    return Interval(source.lo() + offset, source.hi() + offset);
  }

  friend bool operator==(const TranslationPiece&,
                         const TranslationPiece&) = default;
};

// Invertible measure-preserving map of [0,1) that translates finitely many
// half-open pieces: x -> x + offset(piece containing x).
//
// Construction certifies bijectivity: the sources and the images must each
// tile [0,1) exactly. Pieces are stored sorted by source but are not merged;
// Canonical() merges adjacent pieces with equal offsets, and operator==
// compares canonical forms.
class PiecewiseTranslation {
 public:
  // The identity map.
  PiecewiseTranslation();
  // Throws ValidationError if a source is empty or lies outside [0,1), or
  // if sources or images fail to tile [0,1).
  explicit PiecewiseTranslation(std::vector<TranslationPiece> pieces);

  static PiecewiseTranslation Identity() { return PiecewiseTranslation(); }
  // x -> x + alpha mod 1.
  static PiecewiseTranslation Rotation(const Rat& alpha);
  // [0,1/2) -> +1/2, [1/2,1) -> -1/2.
  static PiecewiseTranslation HalfSwap();

  const std::vector<TranslationPiece>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  PiecewiseTranslation Canonical() const;

  friend bool operator==(const PiecewiseTranslation& a,
                         const PiecewiseTranslation& b);

 private:
  std::vector<TranslationPiece> pieces_;
};

std::ostream& operator<<(std::ostream& os, const PiecewiseTranslation& t);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_PIECEWISE_TRANSLATION_H_
