// Copyright 2026 The gridstate Authors
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

// Exact scalars for grid-state amplitudes and symbolic minors.
//
// Amplitudes have the form (p/q)*sqrt(r). Products of amplitudes stay in that
// form, sums do not, so symbolic coefficients live in RadicalNumber: a finite
// sum of rationals times square roots of distinct squarefree integers. Those
// square roots are linearly independent over Q, which makes the zero test
// exact.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gridstate {

/// Reduced fraction over int64 with overflow-checked arithmetic.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Splits r > 0 as k^2 * s with s squarefree.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t r);

/// (p/q) * sqrt(r), stored canonically with r squarefree and the square part
/// folded into the rational coefficient.
class Amplitude {
 public:
  Amplitude() : coef_(1), radicand_(1) {}
  Amplitude(std::int64_t p, std::int64_t q, std::int64_t r);

  static Amplitude one() { return Amplitude(); }

  const Rational& coef() const { return coef_; }
  std::int64_t radicand() const { return radicand_; }
  // Canonical (p, q, r) triple used for serialization.
  std::int64_t p() const { return coef_.num(); }
  std::int64_t q() const { return coef_.den(); }
  std::int64_t r() const { return radicand_; }

  double value() const;
  Rational squared() const;  // (p/q)^2 * r, exact
  bool is_one() const { return radicand_ == 1 && coef_ == Rational(1); }

  friend bool operator==(const Amplitude&, const Amplitude&) = default;
  friend auto operator<=>(const Amplitude& a, const Amplitude& b) {
    if (auto c = a.radicand_ <=> b.radicand_; c != 0) return c;
    return a.coef_ <=> b.coef_;
  }

 private:
  Rational coef_;
  std::int64_t radicand_;
};

/// Element of Q(sqrt 2, sqrt 3, ...): sum of coef * sqrt(radicand) over
/// distinct squarefree radicands, zero coefficients never stored.
class RadicalNumber {
 public:
  RadicalNumber() = default;
  RadicalNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  RadicalNumber(std::int64_t n) : RadicalNumber(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  explicit RadicalNumber(const Amplitude& a);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  // Sign from floating evaluation; only called on values already known to be
  // nonzero by the exact test, where the double value cannot underflow for the
  // small integers used here.
  int sign() const;
  double to_double() const;
  RadicalNumber abs() const { return sign() < 0 ? -*this : *this; }
  std::string to_string() const;

  const std::vector<std::pair<std::int64_t, Rational>>& terms() const { return terms_; }

  RadicalNumber operator-() const;
  friend RadicalNumber operator+(const RadicalNumber& a, const RadicalNumber& b);
  friend RadicalNumber operator-(const RadicalNumber& a, const RadicalNumber& b);
  friend RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b);
  RadicalNumber& operator+=(const RadicalNumber& o) { return *this = *this + o; }
  RadicalNumber& operator-=(const RadicalNumber& o) { return *this = *this - o; }
  RadicalNumber& operator*=(const RadicalNumber& o) { return *this = *this * o; }

  friend bool operator==(const RadicalNumber&, const RadicalNumber&) = default;

 private:
  std::vector<std::pair<std::int64_t, Rational>> terms_;  // sorted by radicand
};

}  // namespace gridstate
