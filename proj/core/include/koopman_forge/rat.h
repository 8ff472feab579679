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

#ifndef KOOPMAN_FORGE_RAT_H_
#define KOOPMAN_FORGE_RAT_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace koopman_forge {

// Exact rational number with arbitrary-precision numerator and denominator.
//
// Always kept in lowest terms with a positive denominator, so structural
// equality is numeric equality. Backed by GMP's mpq_t.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  // Throws ValidationError if `den` is zero.
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(mpq_class value);

  // Accepts "p/q" or the integer shorthand "p", with an optional sign.
  static Rat Parse(std::string_view text);
  // 2^exponent; the exponent may be negative.
  static Rat Pow2(int exponent);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // Largest integer <= *this. Throws ResourceError if it does not fit.
  std::int64_t Floor() const;
  // Smallest integer >= *this. Throws ResourceError if it does not fit.
  std::int64_t Ceil() const;
  double ToDouble() const { return value_.get_d(); }

  // Canonical "p/q" form, e.g. "3/4", "-1/2", "1/1", "0/1".
  std::string ToString() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  // Throws ValidationError on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

inline Rat Abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& Min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& Max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_RAT_H_
