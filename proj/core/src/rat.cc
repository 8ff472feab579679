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

#include "koopman_forge/rat.h"

#include <cctype>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::int64_t ToInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw ResourceError("integer " + z.get_str() + " does not fit in 64 bits");
  }
  return z.get_si();
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::Parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ValidationError("malformed rational '" + std::string(text) +
                          "', expected \"p/q\" or \"p\"");
  }
  mpz_class d = ParseInteger(den);
  if (d == 0) {
    throw ValidationError("rational '" + std::string(text) +
                          "' has zero denominator");
  }
  mpq_class q(ParseInteger(num), d);
  return Rat(std::move(q));
}

Rat Rat::Pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(
                                      exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rat(mpq_class(mpz_class(1), p)) : Rat(mpq_class(p));
}

std::int64_t Rat::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64(q);
}

std::int64_t Rat::Ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64(q);
}

std::string Rat::ToString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ValidationError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

}  // namespace koopman_forge
