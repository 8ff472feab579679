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

#include "koopman_forge/piecewise_translation.h"

#include <algorithm>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

bool ByLo(const Interval& a, const Interval& b) { return a.lo() < b.lo(); }

}  // namespace

PiecewiseTranslation::PiecewiseTranslation()
    : pieces_{TranslationPiece{Interval(), Rat(0)}} {}

PiecewiseTranslation::PiecewiseTranslation(std::vector<TranslationPiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw ValidationError("piecewise translation needs at least one piece");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const TranslationPiece& a, const TranslationPiece& b) {
              return ByLo(a.source, b.source);
            });
  std::vector<Interval> sources;
  std::vector<Interval> images;
  sources.reserve(pieces_.size());
  images.reserve(pieces_.size());
  for (const TranslationPiece& p : pieces_) {
    if (p.source.empty()) {
      throw ValidationError("piecewise translation has an empty source piece " +
                            p.source.lo().ToString());
    }
    const Rat lo = p.source.lo() + p.offset;
    const Rat hi = p.source.hi() + p.offset;
    if (lo < 0 || hi > 1) {
      throw ValidationError("piece image [" + lo.ToString() + ", " +
                            hi.ToString() + ") leaves [0,1)");
    }
    sources.push_back(p.source);
    images.push_back(Interval(lo, hi));
  }
  if (!TilesUnitInterval(sources)) {
    throw ValidationError("piecewise translation sources do not tile [0,1)");
  }
  std::sort(images.begin(), images.end(), ByLo);
  if (!TilesUnitInterval(images)) {
    throw ValidationError(
        "piecewise translation images do not tile [0,1); map is not a bijection");
  }
}

PiecewiseTranslation PiecewiseTranslation::Rotation(const Rat& alpha) {
  const Rat shift = alpha - Rat(alpha.Floor());
  if (shift.is_zero()) return Identity();
  const Rat cut = Rat(1) - shift;
  return PiecewiseTranslation({{Interval(0, cut), shift},
                               {Interval(cut, 1), shift - Rat(1)}});
}

PiecewiseTranslation PiecewiseTranslation::HalfSwap() {
  return PiecewiseTranslation({{Interval(0, Rat(1, 2)), Rat(1, 2)},
                               {Interval(Rat(1, 2), 1), Rat(-1, 2)}});
}

PiecewiseTranslation PiecewiseTranslation::Canonical() const {
  PiecewiseTranslation result = *this;
  std::vector<TranslationPiece> merged;
  merged.reserve(pieces_.size());
  for (const TranslationPiece& p : pieces_) {
    if (!merged.empty() && merged.back().offset == p.offset) {
      merged.back().source = Interval(merged.back().source.lo(), p.source.hi());
    } else {
      merged.push_back(p);
    }
  }
  result.pieces_ = std::move(merged);
  return result;
}

bool operator==(const PiecewiseTranslation& a, const PiecewiseTranslation& b) {
  return a.Canonical().pieces_ == b.Canonical().pieces_;
}

std::ostream& operator<<(std::ostream& os, const PiecewiseTranslation& t) {
  os << "{";
  for (std::size_t i = 0; i < t.piece_count(); ++i) {
    if (i > 0) os << ", ";
    os << t.pieces()[i].source << " -> " << t.pieces()[i].offset;
  }
  return os << "}";
}

}  // namespace koopman_forge
