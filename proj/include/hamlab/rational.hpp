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

#ifndef HAMLAB_RATIONAL_HPP_
#define HAMLAB_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace hamlab {

// Non-negative-denominator fraction used for every threshold so that
// comparisons against integer counts are exact.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t num, int64_t den = 1);

  // Accepts "a/b", "a" or a decimal literal such as "0.25".
  static Rational Parse(std::string_view text);
  // Closest fraction with denominator `max_den` (rounded down).
  static Rational FromDouble(double value, int64_t max_den = 1000000);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  // this * n <= count, evaluated exactly.
  bool TimesLeq(int64_t n, int64_t count) const;
  // this * n < count, evaluated exactly.
  bool TimesLess(int64_t n, int64_t count) const;
  // floor(this * n) and ceil(this * n).
  int64_t FloorTimes(int64_t n) const;
  int64_t CeilTimes(int64_t n) const;

  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

 private:
  void Normalize();

  int64_t num_ = 0;
  int64_t den_ = 1;
};

// Largest fraction with denominator `den` not exceeding sqrt(x).
Rational SqrtFloor(const Rational& x, int64_t den = 10000);

}  // namespace hamlab

#endif  // HAMLAB_RATIONAL_HPP_
