// Copyright 2026 The hoqc developers
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

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hoqc {

/**
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Invariants: denominator > 0, gcd(|num|, den) == 1.  All arithmetic is
 * carried out in 128-bit intermediates and an exception is thrown if a
 * reduced result does not fit in 64 bits.  Identity coefficients of the
 * type calculus stay tiny (denominators are products of subsystem
 * dimensions), so overflow indicates a malformed input rather than a
 * genuine size limit.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }
  explicit Rational(std::int64_t num) : num_(num), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator*(const Rational& other) const {
    return from_i128(static_cast<__int128>(num_) * other.num_,
                     static_cast<__int128>(den_) * other.den_);
  }

  Rational operator/(const Rational& other) const {
    if (other.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_i128(static_cast<__int128>(num_) * other.den_,
                     static_cast<__int128>(den_) * other.num_);
  }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const Rational& other) const { return !(*this == other); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  static Rational from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    const __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) {
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hoqc
