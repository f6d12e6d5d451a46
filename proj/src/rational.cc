// Copyright 2026 The hamlab Authors
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

#include "hamlab/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hamlab/errors.hpp"

namespace hamlab {
namespace {

using i128 = __int128;

int64_t ParseInt(std::string_view text) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad rational component: " + std::string(text));
  }
  return value;
}

int64_t Narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<int64_t>(v);
}

Rational FromWide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(Narrow(num), Narrow(den));
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InputError("zero denominator");
  Normalize();
}

void Rational::Normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return Rational(ParseInt(text.substr(0, slash)),
                    ParseInt(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(ParseInt(text));
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  if (frac.size() > 12) throw InputError("too many decimals");
  int64_t den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  bool negative = !digits.empty() && digits[0] == '-';
  int64_t whole = digits.empty() || digits == "-" ? 0 : ParseInt(digits);
  int64_t part = frac.empty() ? 0 : ParseInt(frac);
  int64_t num = std::abs(whole) * den + part;
  return Rational(negative ? -num : num, den);
}

Rational Rational::FromDouble(double value, int64_t max_den) {
  return Rational(static_cast<int64_t>(std::floor(value * max_den)), max_den);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::TimesLeq(int64_t n, int64_t count) const {
  return static_cast<i128>(num_) * n <= static_cast<i128>(count) * den_;
}

bool Rational::TimesLess(int64_t n, int64_t count) const {
  return static_cast<i128>(num_) * n < static_cast<i128>(count) * den_;
}

int64_t Rational::FloorTimes(int64_t n) const {
  i128 p = static_cast<i128>(num_) * n;
  i128 q = p / den_;
  if (p % den_ != 0 && p < 0) --q;
  return Narrow(q);
}

int64_t Rational::CeilTimes(int64_t n) const {
  i128 p = static_cast<i128>(num_) * n;
  i128 q = p / den_;
  if (p % den_ != 0 && p > 0) ++q;
  return Narrow(q);
}

Rational Rational::operator*(const Rational& o) const {
  return FromWide(static_cast<i128>(num_) * o.num_,
                  static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InputError("division by zero");
  return FromWide(static_cast<i128>(num_) * o.den_,
                  static_cast<i128>(den_) * o.num_);
}

Rational Rational::operator+(const Rational& o) const {
  return FromWide(static_cast<i128>(num_) * o.den_ +
                      static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return FromWide(static_cast<i128>(num_) * o.den_ -
                      static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

Rational SqrtFloor(const Rational& x, int64_t den) {
  if (x.num() < 0) throw InputError("sqrt of negative");
  // Largest k with (k/den)^2 <= x.
  int64_t k = static_cast<int64_t>(std::floor(std::sqrt(x.ToDouble()) * den));
  auto fits = [&](int64_t c) {
    return static_cast<i128>(c) * c * x.den() <=
           static_cast<i128>(x.num()) * den * den;
  };
  while (k > 0 && !fits(k)) --k;
  while (fits(k + 1)) ++k;
  return Rational(k, den);
}

}  // namespace hamlab
