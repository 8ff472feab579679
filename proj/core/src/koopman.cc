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

#include "koopman_forge/koopman.h"

#include <cmath>
#include <utility>

#include "koopman_forge/errors.h"
#include "koopman_forge/transforms.h"

namespace koopman_forge {

DoublyStochasticMatrix KoopmanMatrix(const PiecewiseAffineMap& map, int level,
                                     const ResourceLimits& limits) {
  limits.CheckLevel(level);
  const std::size_t size = std::size_t{1} << level;
  const Rat cells = Rat(static_cast<std::int64_t>(size));
  std::vector<Rat> entries(size * size);

  for (const AffineBranch& b : map.branches()) {
    const Rat weight = cells / Abs(b.slope);
    const auto j_first = static_cast<std::size_t>((b.source.lo() * cells).Floor());
    const auto j_last = static_cast<std::size_t>((b.source.hi() * cells).Ceil());
    for (std::size_t j = j_first; j < j_last; ++j) {
      const auto part = Intersect(b.source, Interval::Dyadic(level, static_cast<std::int64_t>(j)));
      if (!part) continue;
      Rat y0 = b.Map(part->lo());
      Rat y1 = b.Map(part->hi());
      if (y1 < y0) std::swap(y0, y1);
      const auto k_first = static_cast<std::size_t>((y0 * cells).Floor());
      const auto k_last = static_cast<std::size_t>((y1 * cells).Ceil());
      for (std::size_t k = k_first; k < k_last; ++k) {
        const Rat lo = Max(y0, Rat(static_cast<std::int64_t>(k)) / cells);
        const Rat hi = Min(y1, Rat(static_cast<std::int64_t>(k + 1)) / cells);
        if (lo < hi) entries[j * size + k] += (hi - lo) * weight;
      }
    }
  }
  return MakeMatrixFromFlows(level, std::move(entries));
}

StepFunction TransferApply(const PiecewiseAffineMap& map, const StepFunction& f) {
  return detail::PushForward(map.branches(), f);
}

Rat RangeDistanceSquared(const PiecewiseAffineMap& map, const StepFunction& f) {
  return f.NormSquared() - TransferApply(map, f).NormSquared();
}

Rat WeakDefect(const DoublyStochasticMatrix& a, const DoublyStochasticMatrix& b) {
  if (a.level() != b.level()) {
    throw ValidationError("weak defect needs matrices of equal level");
  }
  Rat worst = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      const Rat d = Abs(a(j, k) - b(j, k));
      if (worst < d) worst = d;
    }
  }
  return worst;
}

Rat WeakDefect(const PiecewiseAffineMap& t, const PiecewiseAffineMap& s,
               int level, const ResourceLimits& limits) {
  return WeakDefect(KoopmanMatrix(t, level, limits), KoopmanMatrix(s, level, limits));
}

MetricBasis::MetricBasis(std::vector<StepFunction> functions,
                         std::vector<std::string> labels)
    : functions_(std::move(functions)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t j = 1; j <= functions_.size(); ++j) {
      labels_.push_back("f" + std::to_string(j));
    }
  }
  if (labels_.size() != functions_.size()) {
    throw ValidationError("metric basis needs one label per function");
  }
  norms_squared_.reserve(functions_.size());
  for (const StepFunction& f : functions_) {
    norms_squared_.push_back(f.NormSquared());
    if (norms_squared_.back().is_zero()) {
      throw ValidationError("metric basis functions must be nonzero");
    }
  }
}

MetricBasis MetricBasis::DyadicIndicators(int max_level,
                                          const ResourceLimits& limits) {
  limits.CheckLevel(max_level);
  std::vector<StepFunction> functions;
  std::vector<std::string> labels;
  for (int level = 0; level <= max_level; ++level) {
    for (std::int64_t j = 0; j < (std::int64_t{1} << level); ++j) {
      functions.push_back(StepFunction::DyadicIndicator(level, j));
      labels.push_back("dyadic:" + std::to_string(j + 1) + ":" +
                       std::to_string(level));
    }
  }
  return MetricBasis(std::move(functions), std::move(labels));
}

double MetricBasis::TailBound() const {
  return 2.0 * std::ldexp(1.0, -static_cast<int>(functions_.size()));
}

MetricReport OpMetric(const PiecewiseAffineMap& t, const PiecewiseAffineMap& s,
                      const MetricBasis& basis) {
  MetricReport report;
  report.terms.reserve(basis.size());
  report.tail_bound = basis.TailBound();
  const bool same = t == s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const StepFunction& f = basis.functions()[i];
    const Rat& norm_squared = basis.norms_squared()[i];
    Rat diff_squared =
        same ? Rat(0) : StepL2Dist(KoopmanApply(t, f), KoopmanApply(s, f)).squared;
    const double ratio = (diff_squared / norm_squared).ToDouble();
    const double value = std::ldexp(std::sqrt(ratio), -static_cast<int>(i + 1));
    report.value += value;
    report.terms.push_back(
        MetricTerm{i + 1, std::move(diff_squared), norm_squared, value});
  }
  return report;
}

}  // namespace koopman_forge
