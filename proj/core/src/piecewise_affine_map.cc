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

#include "koopman_forge/piecewise_affine_map.h"

#include <algorithm>
#include <utility>

#include "koopman_forge/errors.h"
#include "koopman_forge/transforms.h"

namespace koopman_forge {

Interval AffineBranch::image() const {
  const Rat a = Map(source.lo());
  const Rat b = Map(source.hi());
  return slope.sign() > 0 ? Interval(a, b) : Interval(b, a);
}

PiecewiseAffineMap::PiecewiseAffineMap()
    : branches_{AffineBranch{Interval(), Rat(1), Rat(0)}} {}

PiecewiseAffineMap::PiecewiseAffineMap(const PiecewiseTranslation& t) {
  branches_.reserve(t.piece_count());
  for (const TranslationPiece& p : t.pieces()) {
    branches_.push_back(AffineBranch{p.source, Rat(1), p.offset});
  }
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffineBranch> branches)
    : branches_(std::move(branches)) {
  std::sort(branches_.begin(), branches_.end(),
            [](const AffineBranch& a, const AffineBranch& b) {
              return a.source.lo() < b.source.lo();
            });
  std::vector<Interval> sources;
  sources.reserve(branches_.size());
  for (const AffineBranch& b : branches_) {
    if (b.slope.is_zero()) {
      throw ValidationError("affine branch on [" + b.source.lo().ToString() +
                            ", " + b.source.hi().ToString() +
                            ") has zero slope");
    }
    const Rat a = b.Map(b.source.lo());
    const Rat c = b.Map(b.source.hi());
    if (Min(a, c) < 0 || Max(a, c) > 1) {
      throw ValidationError("affine branch on [" + b.source.lo().ToString() +
                            ", " + b.source.hi().ToString() +
                            ") maps outside [0,1)");
    }
    sources.push_back(b.source);
  }
  if (branches_.empty() || !TilesUnitInterval(sources)) {
    throw ValidationError("affine branch sources do not tile [0,1)");
  }
  const StepFunction density =
      detail::PushForward(branches_, StepFunction::Constant(1));
  if (density != StepFunction::Constant(1)) {
    throw ValidationError(
        "piecewise-affine map does not preserve Lebesgue measure");
  }
}

PiecewiseAffineMap PiecewiseAffineMap::Doubling() {
  return PiecewiseAffineMap({{Interval(0, Rat(1, 2)), Rat(2), Rat(0)},
                             {Interval(Rat(1, 2), 1), Rat(2), Rat(-1)}});
}

PiecewiseAffineMap PiecewiseAffineMap::Tent() {
  return PiecewiseAffineMap({{Interval(0, Rat(1, 2)), Rat(2), Rat(0)},
                             {Interval(Rat(1, 2), 1), Rat(-2), Rat(2)}});
}

std::size_t PiecewiseAffineMap::BranchIndex(const Rat& x) const {
  auto it = std::upper_bound(
      branches_.begin(), branches_.end(), x,
      [](const Rat& v, const AffineBranch& b) { return v < b.source.lo(); });
  return static_cast<std::size_t>(it - branches_.begin()) - 1;
}

std::ostream& operator<<(std::ostream& os, const PiecewiseAffineMap& m) {
  os << "{";
  for (std::size_t i = 0; i < m.branch_count(); ++i) {
    const AffineBranch& b = m.branches()[i];
    if (i > 0) os << ", ";
    os << b.source << ": " << b.slope << "*x + " << b.intercept;
  }
  return os << "}";
}

}  // namespace koopman_forge
