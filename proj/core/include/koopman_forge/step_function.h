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

#ifndef KOOPMAN_FORGE_STEP_FUNCTION_H_
#define KOOPMAN_FORGE_STEP_FUNCTION_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "koopman_forge/interval.h"
#include "koopman_forge/rat.h"

namespace koopman_forge {

// Step function on [0,1) with rational breakpoints and values:
//   f(x) = values[i] for x in [breakpoints[i], breakpoints[i+1]).
//
// Two step functions compare equal when their canonical forms (adjacent
// equal-valued pieces merged) coincide, i.e. when they are the same function.
class StepFunction {
 public:
  // The zero function.
  StepFunction();
  // Throws ValidationError unless breakpoints strictly increase from 0 to 1
  // and there is exactly one value per piece.
  StepFunction(std::vector<Rat> breakpoints, std::vector<Rat> values);

  static StepFunction Constant(const Rat& c);
  static StepFunction Indicator(const Interval& interval);
  static StepFunction DyadicIndicator(int level, std::int64_t index);
  // 1 on [0,1/2), -1 on [1/2,1).
  static StepFunction Rademacher();

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Rat>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }
  Interval piece(std::size_t i) const {
    return Interval(breakpoints_[i], breakpoints_[i + 1]);
  }

  // Throws DomainError unless 0 <= x < 1.
  const Rat& Evaluate(const Rat& x) const;
  // Index of the piece containing x, for 0 <= x < 1.
  std::size_t PieceIndex(const Rat& x) const;

  StepFunction Canonical() const;
  bool IsZero() const;
  bool IsNonnegative() const;
  Rat NormSquared() const;
  Rat Integral() const;

  StepFunction& operator+=(const StepFunction& other);
  StepFunction& operator-=(const StepFunction& other);
  StepFunction& operator*=(const Rat& scalar);

  friend StepFunction operator+(StepFunction a, const StepFunction& b) {
    return a += b;
  }
  friend StepFunction operator-(StepFunction a, const StepFunction& b) {
    return a -= b;
  }
  friend StepFunction operator*(StepFunction f, const Rat& c) { return f *= c; }
  friend StepFunction operator*(const Rat& c, StepFunction f) { return f *= c; }

  friend bool operator==(const StepFunction& a, const StepFunction& b);

 private:
  struct Unchecked {};
  StepFunction(Unchecked, std::vector<Rat> breakpoints, std::vector<Rat> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}

  friend StepFunction MakeStepFunctionUnchecked(std::vector<Rat>,
                                                std::vector<Rat>);

  std::vector<Rat> breakpoints_;
  std::vector<Rat> values_;
};

// Exact integral of f*g over [0,1), on the common refinement.
Rat StepInner(const StepFunction& f, const StepFunction& g);

struct L2Distance {
  Rat squared;   // exact
  double value;  // sqrt(squared), display only
};

L2Distance StepL2Dist(const StepFunction& f, const StepFunction& g);

// Breakpoint lists are trusted to be valid; used by operators that build
// step functions from already-sorted data.
StepFunction MakeStepFunctionUnchecked(std::vector<Rat> breakpoints,
                                       std::vector<Rat> values);

std::ostream& operator<<(std::ostream& os, const StepFunction& f);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_STEP_FUNCTION_H_
