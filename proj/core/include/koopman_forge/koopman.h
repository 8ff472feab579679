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

#ifndef KOOPMAN_FORGE_KOOPMAN_H_
#define KOOPMAN_FORGE_KOOPMAN_H_

#include <string>
#include <vector>

#include "koopman_forge/doubly_stochastic_matrix.h"
#include "koopman_forge/limits.h"
#include "koopman_forge/piecewise_affine_map.h"
#include "koopman_forge/rat.h"
#include "koopman_forge/step_function.h"

namespace koopman_forge {

// Dyadic block matrix of a map at `level`, in the flow convention:
//   entry (j, k) = 2^n * mu(I_j ∩ T^{-1} I_k),
// the normalized mass carried from cell I_j into cell I_k. The Koopman inner
// product <T 1_{I_k}, 1_{I_j}> is entry (j, k) / 2^n.
//
// Throws ResourceError if `level` exceeds `limits.max_level`.
DoublyStochasticMatrix KoopmanMatrix(const PiecewiseAffineMap& map, int level,
                                     const ResourceLimits& limits = {});

// Adjoint of the Koopman operator (transfer operator), in canonical form.
// Characterized by <TransferApply(T, f), g> = <f, KoopmanApply(T, g)>.
StepFunction TransferApply(const PiecewiseAffineMap& map, const StepFunction& f);

// dist(f, range of the Koopman operator)^2 = ||f||^2 - ||T* f||^2.
//
// Exact because the Koopman operator is an isometry: its range is closed and
// T T* is the orthogonal projection onto it.
Rat RangeDistanceSquared(const PiecewiseAffineMap& map, const StepFunction& f);

// Max over (j, k) of |A(j, k) - B(j, k)|. Zero iff the two operators agree
// weakly on all dyadic functions of degree <= level.
Rat WeakDefect(const DoublyStochasticMatrix& a, const DoublyStochasticMatrix& b);
Rat WeakDefect(const PiecewiseAffineMap& t, const PiecewiseAffineMap& s,
               int level, const ResourceLimits& limits = {});

inline constexpr int kDefaultBasisLevel = 6;

// Finite family of nonzero test functions f_1, f_2, ... with weights 2^{-j}.
class MetricBasis {
 public:
  // Throws ValidationError if a function is zero or labels mismatch in size.
  MetricBasis(std::vector<StepFunction> functions,
              std::vector<std::string> labels = {});

  // Indicators of every dyadic cell of levels 0..max_level, level by level:
  // 2^(max_level+1) - 1 functions, labelled "dyadic:j:n" (j is 1-based).
  static MetricBasis DyadicIndicators(int max_level = kDefaultBasisLevel,
                                      const ResourceLimits& limits = {});

  std::size_t size() const { return functions_.size(); }
  const std::vector<StepFunction>& functions() const { return functions_; }
  const std::vector<Rat>& norms_squared() const { return norms_squared_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Sum over all j > size() of the largest possible term 2 * 2^{-j}.
  double TailBound() const;

 private:
  std::vector<StepFunction> functions_;
  std::vector<Rat> norms_squared_;
  std::vector<std::string> labels_;
};

struct MetricTerm {
  std::size_t index;   // 1-based j
  Rat diff_squared;    // ||T f_j - S f_j||^2, exact
  Rat norm_squared;    // ||f_j||^2, exact
  double value;        // ||T f_j - S f_j|| / (2^j ||f_j||)
};

struct MetricReport {
  std::vector<MetricTerm> terms;
  double value = 0.0;       // truncated sum
  double tail_bound = 0.0;  // bound on the omitted terms
};

// Truncated strong-operator metric
//   d(T, S) = sum_j ||T f_j - S f_j|| / (2^j ||f_j||)
// over the basis functions.
MetricReport OpMetric(const PiecewiseAffineMap& t, const PiecewiseAffineMap& s,
                      const MetricBasis& basis);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_KOOPMAN_H_
