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

#include "koopman_forge/interval.h"

#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ < 0 || hi_ > 1 || hi_ < lo_) {
    throw ValidationError("interval [" + lo_.ToString() + ", " +
                          hi_.ToString() + ") is not a subinterval of [0,1]");
  }
}

Interval Interval::Dyadic(int level, std::int64_t index) {
  const Rat width = Rat::Pow2(-level);
  return Interval(width * Rat(index), width * Rat(index + 1));
}

std::optional<Interval> Intersect(const Interval& a, const Interval& b) {
  const Rat& lo = Max(a.lo(), b.lo());
  const Rat& hi = Min(a.hi(), b.hi());
  if (!(lo < hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::vector<Interval> DyadicPartition(int level, const ResourceLimits& limits) {
  limits.CheckLevel(level);
  const std::int64_t count = std::int64_t{1} << level;
  std::vector<Interval> cells;
  cells.reserve(static_cast<std::size_t>(count));
  for (std::int64_t j = 0; j < count; ++j) cells.push_back(Interval::Dyadic(level, j));
  return cells;
}

bool TilesUnitInterval(const std::vector<Interval>& intervals) {
  Rat cursor = 0;
  for (const Interval& i : intervals) {
    if (i.empty() || i.lo() != cursor) return false;
    cursor = i.hi();
  }
  return cursor == 1;
}

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  return os << "[" << i.lo() << ", " << i.hi() << ")";
}

}  // namespace koopman_forge
