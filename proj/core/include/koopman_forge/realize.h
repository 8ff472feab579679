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

#ifndef KOOPMAN_FORGE_REALIZE_H_
#define KOOPMAN_FORGE_REALIZE_H_

#include <optional>
#include <span>
#include <vector>

#include "koopman_forge/doubly_stochastic_matrix.h"
#include "koopman_forge/koopman.h"
#include "koopman_forge/limits.h"
#include "koopman_forge/piecewise_affine_map.h"
#include "koopman_forge/piecewise_translation.h"
#include "koopman_forge/rat.h"

namespace koopman_forge {

// How much of each target cell I_k has been covered so far during a
// first-fit realization. Cells fill from their left end.
class PlacementState {
 public:
  explicit PlacementState(int level);

  // Claims [start, start + length) at the left end of the uncovered part of
  // cell k and returns start. Throws std::logic_error on overfill.
  Rat Place(std::size_t k, const Rat& length);

  const std::vector<Rat>& fill() const { return fill_; }
  // Every cell is exactly covered.
  bool Complete() const;

 private:
  Rat cell_width_;
  std::vector<Rat> fill_;
};

// Builds an invertible piecewise translation whose dyadic block matrix at
// level m.level() is exactly m.
//
// Schedule (normative, so output is reproducible): source cells I_j in
// order; each I_j is cut left to right into pieces of length m(j,k)/2^n for
// k = 0, 1, ...; the piece for k is translated onto the left end of the
// still-uncovered part of I_k. Zero entries produce no piece, so the result
// has at most 4^n pieces and is not merged.
//
// Throws ResourceError if the level exceeds `limits.max_level`.
PiecewiseTranslation RealizeIet(const DoublyStochasticMatrix& m,
                                const ResourceLimits& limits = {});

// sum_i weights[i] * P_{perms[i]}. Throws ValidationError if the lists
// differ in length, a weight is negative, or the weights do not sum to 1.
DoublyStochasticMatrix BirkhoffCombination(std::span<const Permutation> perms,
                                           std::span<const Rat> weights);

struct ApproximationStep {
  int level = 0;
  PiecewiseTranslation map;
  // weak_defects[m - 1] is the weak defect against the target at level m,
  // for m = 1..n_max. Entries with m <= level are exactly zero.
  std::vector<Rat> weak_defects;
  // Metric to the target; absent for matrix targets.
  std::optional<MetricReport> metric;
};

// T_n = RealizeIet(KoopmanMatrix(target, n)) for n = 1..n_max, with weak
// defects against the target and the truncated metric d(T_n, target).
std::vector<ApproximationStep> ApproximationSequence(
    const PiecewiseAffineMap& target, int n_max, const MetricBasis& basis,
    const ResourceLimits& limits = {});

// Matrix target: T_n realizes the level-n coarsening of `target`; only weak
// defects are reported since a matrix has no Koopman images beyond its own
// resolution.
std::vector<ApproximationStep> ApproximationSequence(
    const DoublyStochasticMatrix& target, const ResourceLimits& limits = {});

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_REALIZE_H_
