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

#include "koopman_forge/transforms.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

void CheckDomain(const Rat& x) {
  if (x < 0 || !(x < 1)) {
    throw DomainError("point " + x.ToString() + " is outside [0,1)");
  }
}

// Breakpoints of f lying strictly inside (lo, hi).
std::pair<std::vector<Rat>::const_iterator, std::vector<Rat>::const_iterator>
InteriorBreakpoints(const StepFunction& f, const Rat& lo, const Rat& hi) {
  const auto& b = f.breakpoints();
  return {std::upper_bound(b.begin(), b.end(), lo),
          std::lower_bound(b.begin(), b.end(), hi)};
}

}  // namespace

PiecewiseAffineMap AsAffine(const MeasurePreservingMap& map) {
  return std::visit([](const auto& m) { return PiecewiseAffineMap(m); }, map);
}

Rat Apply(const PiecewiseAffineMap& map, const Rat& x) {
  CheckDomain(x);
  Rat y = map.branches()[map.BranchIndex(x)].Map(x);
  if (y == 1) y = 0;
  return y;
}

Rat Apply(const PiecewiseTranslation& map, const Rat& x) {
  CheckDomain(x);
  const auto& pieces = map.pieces();
  auto it = std::upper_bound(
      pieces.begin(), pieces.end(), x,
      [](const Rat& v, const TranslationPiece& p) { return v < p.source.lo(); });
  return x + std::prev(it)->offset;
}

std::vector<Interval> Preimage(const PiecewiseAffineMap& map, const Interval& j) {
  std::vector<Interval> parts;
  for (const AffineBranch& b : map.branches()) {
    const auto overlap = Intersect(b.image(), j);
    if (!overlap) continue;
    const Rat x0 = b.Unmap(overlap->lo());
    const Rat x1 = b.Unmap(overlap->hi());
    parts.push_back(x0 < x1 ? Interval(x0, x1) : Interval(x1, x0));
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo() < b.lo();
  });
  std::vector<Interval> merged;
  Rat total = 0;
  for (const Interval& p : parts) {
    total += p.length();
    if (!merged.empty() && merged.back().hi() == p.lo()) {
      merged.back() = Interval(merged.back().lo(), p.hi());
    } else {
      merged.push_back(p);
    }
  }
  if (total != j.length()) {
    throw std::logic_error("preimage of " + j.lo().ToString() + ".." +
                           j.hi().ToString() + " has length " +
                           total.ToString() + "; map is not measure preserving");
  }
  return merged;
}

StepFunction KoopmanApply(const PiecewiseAffineMap& map, const StepFunction& f) {
  std::vector<Rat> breakpoints{Rat(0)};
  std::vector<Rat> values;
  std::vector<Rat> cuts;
  for (const AffineBranch& b : map.branches()) {
    const Interval image = b.image();
    cuts.clear();
    cuts.push_back(b.source.lo());
    auto [first, last] = InteriorBreakpoints(f, image.lo(), image.hi());
    for (auto it = first; it != last; ++it) cuts.push_back(b.Unmap(*it));
    cuts.push_back(b.source.hi());
    if (b.slope.sign() < 0) std::reverse(cuts.begin() + 1, cuts.end() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rat y = Min(b.Map(cuts[i]), b.Map(cuts[i + 1]));
      values.push_back(f.values()[f.PieceIndex(y)]);
      breakpoints.push_back(cuts[i + 1]);
    }
  }
  return MakeStepFunctionUnchecked(std::move(breakpoints), std::move(values))
      .Canonical();
}

PiecewiseTranslation Compose(const PiecewiseTranslation& outer,
                             const PiecewiseTranslation& inner,
                             const ResourceLimits& limits) {
  const auto& outer_pieces = outer.pieces();
  std::vector<TranslationPiece> pieces;
  for (const TranslationPiece& p : inner.pieces()) {
    const Interval image = p.image();
    auto it = std::upper_bound(outer_pieces.begin(), outer_pieces.end(),
                               image.lo(),
                               [](const Rat& v, const TranslationPiece& q) {
                                 return v < q.source.lo();
                               });
    for (--it; it != outer_pieces.end() && it->source.lo() < image.hi(); ++it) {
      const auto overlap = Intersect(image, it->source);
      if (!overlap) continue;
      pieces.push_back(TranslationPiece{
          Interval(overlap->lo() - p.offset, overlap->hi() - p.offset),
          p.offset + it->offset});
    }
    limits.CheckPieces(pieces.size());
  }
  return PiecewiseTranslation(std::move(pieces)).Canonical();
}

PiecewiseTranslation Invert(const PiecewiseTranslation& map) {
  std::vector<TranslationPiece> pieces;
  pieces.reserve(map.piece_count());
  for (const TranslationPiece& p : map.pieces()) {
    pieces.push_back(TranslationPiece{p.image(), -p.offset});
  }
  return PiecewiseTranslation(std::move(pieces));
}

PiecewiseTranslation Power(const PiecewiseTranslation& map, int exponent,
                           const ResourceLimits& limits) {
  const PiecewiseTranslation base = exponent < 0 ? Invert(map) : map;
  PiecewiseTranslation result;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    result = Compose(base, result, limits);
  }
  return result;
}

namespace detail {

StepFunction PushForward(const std::vector<AffineBranch>& branches,
                         const StepFunction& f) {
  struct Segment {
    Rat lo;
    Rat hi;
    Rat value;
  };
  std::vector<Segment> segments;
  std::vector<Rat> points{Rat(0), Rat(1)};
  for (const AffineBranch& b : branches) {
    const Rat inv_slope = Rat(1) / Abs(b.slope);
    Rat x0 = b.source.lo();
    auto [first, last] = InteriorBreakpoints(f, b.source.lo(), b.source.hi());
    auto emit = [&](const Rat& x1) {
      const Rat& v = f.values()[f.PieceIndex(x0)];
      if (!v.is_zero()) {
        Rat y0 = b.Map(x0);
        Rat y1 = b.Map(x1);
        if (y1 < y0) std::swap(y0, y1);
        points.push_back(y0);
        points.push_back(y1);
        segments.push_back(Segment{std::move(y0), std::move(y1), v * inv_slope});
      }
      x0 = x1;
    };
    for (auto it = first; it != last; ++it) emit(*it);
    emit(b.source.hi());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Rat> delta(points.size());
  auto index_of = [&](const Rat& p) {
    return static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), p) - points.begin());
  };
  for (const Segment& s : segments) {
    delta[index_of(s.lo)] += s.value;
    delta[index_of(s.hi)] -= s.value;
  }
  std::vector<Rat> values;
  values.reserve(points.size() - 1);
  Rat running = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    running += delta[i];
    values.push_back(running);
  }
  return MakeStepFunctionUnchecked(std::move(points), std::move(values))
      .Canonical();
}

}  // namespace detail
}  // namespace koopman_forge
