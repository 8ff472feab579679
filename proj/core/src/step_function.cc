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

#include "koopman_forge/step_function.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

// Walks the common refinement of f and g, calling
// visit(length, f_value, g_value) once per cell.
template <typename Visit>
void ForEachCommonCell(const StepFunction& f, const StepFunction& g,
                       Visit&& visit) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::size_t i = 0;
  std::size_t j = 0;
  Rat left = 0;
  while (i < f.piece_count() && j < g.piece_count()) {
    const Rat& fr = fb[i + 1];
    const Rat& gr = gb[j + 1];
    const Rat& right = Min(fr, gr);
    visit(left, right, f.values()[i], g.values()[j]);
    left = right;
    if (fr == right) ++i;
    if (gr == right) ++j;
  }
}

template <typename Op>
StepFunction Combine(const StepFunction& f, const StepFunction& g, Op op) {
  std::vector<Rat> breakpoints{Rat(0)};
  std::vector<Rat> values;
  breakpoints.reserve(f.piece_count() + g.piece_count() + 1);
  values.reserve(f.piece_count() + g.piece_count());
  ForEachCommonCell(f, g, [&](const Rat&, const Rat& right, const Rat& a,
                              const Rat& b) {
    breakpoints.push_back(right);
    values.push_back(op(a, b));
  });
  return MakeStepFunctionUnchecked(std::move(breakpoints), std::move(values))
      .Canonical();
}

}  // namespace

StepFunction::StepFunction() : breakpoints_{Rat(0), Rat(1)}, values_{Rat(0)} {}

StepFunction::StepFunction(std::vector<Rat> breakpoints, std::vector<Rat> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0 ||
      breakpoints_.back() != 1) {
    throw ValidationError("step function breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw ValidationError("step function breakpoints must strictly increase");
    }
  }
  if (values_.size() + 1 != breakpoints_.size()) {
    throw ValidationError("step function needs exactly one value per piece");
  }
}

StepFunction MakeStepFunctionUnchecked(std::vector<Rat> breakpoints,
                                       std::vector<Rat> values) {
  return StepFunction(StepFunction::Unchecked{}, std::move(breakpoints),
                      std::move(values));
}

StepFunction StepFunction::Constant(const Rat& c) {
  return StepFunction({Rat(0), Rat(1)}, {c});
}

StepFunction StepFunction::Indicator(const Interval& interval) {
  if (interval.empty()) return StepFunction();
  std::vector<Rat> breakpoints{Rat(0)};
  std::vector<Rat> values;
  if (interval.lo() > 0) {
    breakpoints.push_back(interval.lo());
    values.push_back(0);
  }
  breakpoints.push_back(interval.hi());
  values.push_back(1);
  if (interval.hi() < 1) {
    breakpoints.push_back(1);
    values.push_back(0);
  }
  return StepFunction(std::move(breakpoints), std::move(values));
}

StepFunction StepFunction::DyadicIndicator(int level, std::int64_t index) {
  return Indicator(Interval::Dyadic(level, index));
}

StepFunction StepFunction::Rademacher() {
  return StepFunction({Rat(0), Rat(1, 2), Rat(1)}, {Rat(1), Rat(-1)});
}

std::size_t StepFunction::PieceIndex(const Rat& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

const Rat& StepFunction::Evaluate(const Rat& x) const {
  if (x < 0 || !(x < 1)) {
    throw DomainError("point " + x.ToString() + " is outside [0,1)");
  }
  return values_[PieceIndex(x)];
}

StepFunction StepFunction::Canonical() const {
  std::vector<Rat> breakpoints{breakpoints_.front()};
  std::vector<Rat> values;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values.empty() && values.back() == values_[i]) {
      breakpoints.back() = breakpoints_[i + 1];
    } else {
      values.push_back(values_[i]);
      breakpoints.push_back(breakpoints_[i + 1]);
    }
  }
  return StepFunction(Unchecked{}, std::move(breakpoints), std::move(values));
}

bool StepFunction::IsZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return v.is_zero(); });
}

bool StepFunction::IsNonnegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return v.sign() >= 0; });
}

Rat StepFunction::NormSquared() const {
  Rat total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    total += values_[i] * values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
  return total;
}

Rat StepFunction::Integral() const {
  Rat total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    total += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
  return total;
}

StepFunction& StepFunction::operator+=(const StepFunction& other) {
  *this = Combine(*this, other, [](const Rat& a, const Rat& b) { return a + b; });
  return *this;
}

StepFunction& StepFunction::operator-=(const StepFunction& other) {
  *this = Combine(*this, other, [](const Rat& a, const Rat& b) { return a - b; });
  return *this;
}

StepFunction& StepFunction::operator*=(const Rat& scalar) {
  if (scalar.is_zero()) {
    *this = StepFunction();
    return *this;
  }
  for (Rat& v : values_) v *= scalar;
  return *this;
}

bool operator==(const StepFunction& a, const StepFunction& b) {
  const StepFunction ca = a.Canonical();
  const StepFunction cb = b.Canonical();
  return ca.breakpoints_ == cb.breakpoints_ && ca.values_ == cb.values_;
}

Rat StepInner(const StepFunction& f, const StepFunction& g) {
  Rat total = 0;
  ForEachCommonCell(f, g, [&](const Rat& left, const Rat& right, const Rat& a,
                              const Rat& b) {
    if (!a.is_zero() && !b.is_zero()) total += a * b * (right - left);
  });
  return total;
}

L2Distance StepL2Dist(const StepFunction& f, const StepFunction& g) {
  Rat squared = 0;
  ForEachCommonCell(f, g, [&](const Rat& left, const Rat& right, const Rat& a,
                              const Rat& b) {
    if (a != b) {
      const Rat d = a - b;
      squared += d * d * (right - left);
    }
  });
  const double value = std::sqrt(squared.ToDouble());
  return {std::move(squared), value};
}

std::ostream& operator<<(std::ostream& os, const StepFunction& f) {
  os << "{";
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (i > 0) os << ", ";
    os << f.piece(i) << ": " << f.values()[i];
  }
  return os << "}";
}

}  // namespace koopman_forge
