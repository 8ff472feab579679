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

#ifndef KOOPMAN_FORGE_INTERVAL_H_
#define KOOPMAN_FORGE_INTERVAL_H_

#include <optional>
#include <ostream>
#include <vector>

#include "koopman_forge/limits.h"
#include "koopman_forge/rat.h"

namespace koopman_forge {

// Half-open subinterval [lo, hi) of [0,1]. Empty when lo == hi.
class Interval {
 public:
  // The full unit interval [0,1).
  Interval() : lo_(0), hi_(1) {}
  // Throws ValidationError unless 0 <= lo <= hi <= 1.
  Interval(Rat lo, Rat hi);

  // Level-`level` dyadic cell I_{index+1} = [index/2^level, (index+1)/2^level).
  static Interval Dyadic(int level, std::int64_t index);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat length() const { return hi_ - lo_; }
  bool empty() const { return lo_ == hi_; }
  bool Contains(const Rat& x) const { return lo_ <= x && x < hi_; }
  bool Contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rat lo_;
  Rat hi_;
};

// Nonempty intersection, or nullopt.
std::optional<Interval> Intersect(const Interval& a, const Interval& b);

// The 2^level cells of the dyadic partition, in order. Throws ResourceError
// if `level` exceeds `limits.max_level`.
std::vector<Interval> DyadicPartition(int level,
                                      const ResourceLimits& limits = {});

// True if `intervals` are nonempty, sorted, abutting, and cover [0,1).
bool TilesUnitInterval(const std::vector<Interval>& intervals);

std::ostream& operator<<(std::ostream& os, const Interval& i);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_INTERVAL_H_
