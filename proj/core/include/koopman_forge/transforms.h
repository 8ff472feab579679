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

#ifndef KOOPMAN_FORGE_TRANSFORMS_H_
#define KOOPMAN_FORGE_TRANSFORMS_H_

#include <variant>
#include <vector>

#include "koopman_forge/interval.h"
#include "koopman_forge/limits.h"
#include "koopman_forge/piecewise_affine_map.h"
#include "koopman_forge/piecewise_translation.h"
#include "koopman_forge/rat.h"
#include "koopman_forge/step_function.h"

namespace koopman_forge {

// Either kind of map, as loaded from a file or named on the command line.
using MeasurePreservingMap = std::variant<PiecewiseTranslation, PiecewiseAffineMap>;

PiecewiseAffineMap AsAffine(const MeasurePreservingMap& map);

// Image of x under the branch containing it. Throws DomainError unless
// 0 <= x < 1.
Rat Apply(const PiecewiseAffineMap& map, const Rat& x);
Rat Apply(const PiecewiseTranslation& map, const Rat& x);

// T^{-1}(J) as sorted, disjoint, non-abutting intervals (mod endpoints).
// The total length is checked against length(J).
std::vector<Interval> Preimage(const PiecewiseAffineMap& map, const Interval& j);

// Koopman operator: f -> f o T, in canonical form.
//
// On an orientation-reversing branch, f o T is only determined up to the
// finitely many cut points; values are taken from the interior of each piece.
StepFunction KoopmanApply(const PiecewiseAffineMap& map, const StepFunction& f);

// x -> outer(inner(x)), in canonical form.
PiecewiseTranslation Compose(const PiecewiseTranslation& outer,
                             const PiecewiseTranslation& inner,
                             const ResourceLimits& limits = {});

PiecewiseTranslation Invert(const PiecewiseTranslation& map);

// map^exponent by repeated composition; exponent 0 is the identity.
PiecewiseTranslation Power(const PiecewiseTranslation& map, int exponent,
                           const ResourceLimits& limits = {});

namespace detail {

// Transfer (Perron-Frobenius) operator on a step function:
//   (P f)(y) = sum over branches b with y in b(source) of f(b^{-1} y)/|slope|.
StepFunction PushForward(const std::vector<AffineBranch>& branches,
                         const StepFunction& f);

}  // namespace detail

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_TRANSFORMS_H_
