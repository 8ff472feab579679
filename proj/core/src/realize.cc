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

#include "koopman_forge/realize.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {

PlacementState::PlacementState(int level)
    : cell_width_(Rat::Pow2(-level)), fill_(std::size_t{1} << level) {}

Rat PlacementState::Place(std::size_t k, const Rat& length) {
  Rat start = Rat(static_cast<std::int64_t>(k)) * cell_width_ + fill_[k];
  fill_[k] += length;
  if (fill_[k] > cell_width_) {
    throw std::logic_error("target cell " + std::to_string(k) + " overfilled");
  }
  return start;
}

bool PlacementState::Complete() const {
  for (const Rat& f : fill_) {
    if (f != cell_width_) return false;
  }
  return true;
}

PiecewiseTranslation RealizeIet(const DoublyStochasticMatrix& m,
                                const ResourceLimits& limits) {
  limits.CheckLevel(m.level());
  const std::size_t size = m.size();
  const Rat cell_width = Rat::Pow2(-m.level());
  PlacementState state(m.level());
  std::vector<TranslationPiece> pieces;

  for (std::size_t j = 0; j < size; ++j) {
    Rat cursor = Rat(static_cast<std::int64_t>(j)) * cell_width;
    for (std::size_t k = 0; k < size; ++k) {
      if (m(j, k).is_zero()) continue;
      const Rat length = m(j, k) * cell_width;
      const Rat start = state.Place(k, length);
      Rat next = cursor + length;
      pieces.push_back(TranslationPiece{Interval(cursor, next), start - cursor});
      cursor = std::move(next);
    }
    limits.CheckPieces(pieces.size());
  }
  if (!state.Complete()) {
    throw std::logic_error("first-fit placement left a target cell uncovered");
  }
  return PiecewiseTranslation(std::move(pieces));
}

DoublyStochasticMatrix BirkhoffCombination(std::span<const Permutation> perms,
                                           std::span<const Rat> weights) {
  if (perms.empty() || perms.size() != weights.size()) {
    throw ValidationError("need one weight per permutation");
  }
  Rat total = 0;
  for (const Rat& w : weights) {
    if (w.sign() < 0) throw ValidationError("negative weight " + w.ToString());
    total += w;
  }
  if (total != 1) {
    throw ValidationError("weights sum to " + total.ToString() + ", not 1");
  }
  const std::size_t size = perms.front().size();
  std::vector<std::vector<Rat>> rows(size, std::vector<Rat>(size));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].size() != size) {
      throw ValidationError("permutations have different sizes");
    }
    // Validates that perms[i] is a genuine permutation.
    static_cast<void>(DoublyStochasticMatrix::FromPermutation(perms[i]));
    for (std::size_t j = 0; j < size; ++j) rows[j][perms[i][j]] += weights[i];
  }
  return DoublyStochasticMatrix(rows);
}

std::vector<ApproximationStep> ApproximationSequence(
    const PiecewiseAffineMap& target, int n_max, const MetricBasis& basis,
    const ResourceLimits& limits) {
  limits.CheckLevel(n_max);
  std::vector<DoublyStochasticMatrix> target_matrices;
  for (int m = 1; m <= n_max; ++m) {
    target_matrices.push_back(KoopmanMatrix(target, m, limits));
  }
  std::vector<ApproximationStep> steps;
  for (int n = 1; n <= n_max; ++n) {
    ApproximationStep step{n, RealizeIet(target_matrices[n - 1], limits), {}, {}};
    const PiecewiseAffineMap approximant(step.map);
    for (int m = 1; m <= n_max; ++m) {
      step.weak_defects.push_back(WeakDefect(
          KoopmanMatrix(approximant, m, limits), target_matrices[m - 1]));
    }
    step.metric = OpMetric(approximant, target, basis);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<ApproximationStep> ApproximationSequence(
    const DoublyStochasticMatrix& target, const ResourceLimits& limits) {
  const int n_max = target.level();
  limits.CheckLevel(n_max);
  std::vector<ApproximationStep> steps;
  for (int n = 1; n <= n_max; ++n) {
    ApproximationStep step{n, RealizeIet(target.Coarsen(n), limits), {}, {}};
    const PiecewiseAffineMap approximant(step.map);
    for (int m = 1; m <= n_max; ++m) {
      step.weak_defects.push_back(WeakDefect(
          KoopmanMatrix(approximant, m, limits), target.Coarsen(m)));
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace koopman_forge
