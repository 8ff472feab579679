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

#ifndef KOOPMAN_FORGE_PIECEWISE_AFFINE_MAP_H_
#define KOOPMAN_FORGE_PIECEWISE_AFFINE_MAP_H_

#include <ostream>
#include <vector>

#include "koopman_forge/interval.h"
#include "koopman_forge/piecewise_translation.h"
#include "koopman_forge/rat.h"

namespace koopman_forge {

// x -> slope * x + intercept on `source`.
struct AffineBranch {
  Interval source;
  Rat slope;
  Rat intercept;

  Rat Map(const Rat& x) const { return slope * x + intercept; }
  Rat Unmap(const Rat& y) const { return (y - intercept) / slope; }
  // Closure of the image, as a half-open interval [min, max).
  Interval image() const;

  friend bool operator==(const AffineBranch&, const AffineBranch&) = default;
};

// Possibly non-invertible map of [0,1) that is affine on finitely many
// half-open branches and preserves Lebesgue measure.
//
// The constructor checks measure preservation exactly: a piecewise-affine
// map preserves Lebesgue measure iff its transfer operator fixes the
// constant function, i.e. sum over branches covering y of 1/|slope| is 1 for
// almost every y. That sum is a step function with rational breakpoints, so
// the check is finite and complete.
//
// An orientation-reversing branch sends the left end of its source to the
// right end of its image; when that point is 1 it is identified with 0.
class PiecewiseAffineMap {
 public:
  // The identity map.
  PiecewiseAffineMap();
  // Throws ValidationError if the sources do not tile [0,1), a slope is zero,
  // a branch leaves [0,1], or Lebesgue measure is not preserved.
  explicit PiecewiseAffineMap(std::vector<AffineBranch> branches);
  // Every piecewise translation is a piecewise-affine map with unit slopes.
  PiecewiseAffineMap(const PiecewiseTranslation& t);  // NOLINT

  static PiecewiseAffineMap Identity() { return PiecewiseAffineMap(); }
  // 2x mod 1.
  static PiecewiseAffineMap Doubling();
  // 2x on [0,1/2), 2 - 2x on [1/2,1).
  static PiecewiseAffineMap Tent();

  const std::vector<AffineBranch>& branches() const { return branches_; }
  std::size_t branch_count() const { return branches_.size(); }
  // Index of the branch whose source contains x, for 0 <= x < 1.
  std::size_t BranchIndex(const Rat& x) const;

  friend bool operator==(const PiecewiseAffineMap&,
                         const PiecewiseAffineMap&) = default;

 private:
  std::vector<AffineBranch> branches_;
};

std::ostream& operator<<(std::ostream& os, const PiecewiseAffineMap& m);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_PIECEWISE_AFFINE_MAP_H_
