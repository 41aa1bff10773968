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

#include "gridstate/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "exact arithmetic overflow (mul)");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "exact arithmetic overflow (add)");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
  const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t r) {
  if (r <= 0) fail(ErrorCode::InvalidArgument, "radicand must be positive");
  std::int64_t k = 1, s = 1;
  for (std::int64_t f = 2; f * f <= r; ++f) {
    while (r % (f * f) == 0) {
      r /= f * f;
      k *= f;
    }
    if (r % f == 0) {
      r /= f;
      s *= f;
    }
  }
  return {k, s * r};
}

Amplitude::Amplitude(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (q <= 0) fail(ErrorCode::InvalidArgument, "amplitude denominator q must be positive");
  if (r <= 0) fail(ErrorCode::InvalidArgument, "amplitude radicand r must be positive");
  if (p == 0) fail(ErrorCode::InvalidArgument, "amplitudes must be nonzero");
  auto [k, s] = squarefree_split(r);
  coef_ = Rational(p, q) * Rational(k);
  radicand_ = s;
}

double Amplitude::value() const { return coef_.to_double() * std::sqrt(static_cast<double>(radicand_)); }

Rational Amplitude::squared() const { return coef_ * coef_ * Rational(radicand_); }

RadicalNumber::RadicalNumber(const Rational& r) {
  if (!r.is_zero()) terms_.emplace_back(1, r);
}

RadicalNumber::RadicalNumber(const Amplitude& a) { terms_.emplace_back(a.radicand(), a.coef()); }

int RadicalNumber::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_[0].second.sign();
  long double acc = 0;
  for (const auto& [rad, c] : terms_)
    acc += static_cast<long double>(c.num()) / c.den() * std::sqrt(static_cast<long double>(rad));
  return (acc > 0) - (acc < 0);
}

double RadicalNumber::to_double() const {
  double acc = 0;
  for (const auto& [rad, c] : terms_) acc += c.to_double() * std::sqrt(static_cast<double>(rad));
  return acc;
}

std::string RadicalNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rad, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    const Rational mag = c.sign() < 0 && !first ? -c : c;
    if (rad == 1) {
      os << mag.to_string();
    } else {
      if (!(mag == Rational(1))) os << mag.to_string() << "*";
      os << "sqrt(" << rad << ")";
    }
    first = false;
  }
  return os.str();
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RadicalNumber operator+(const RadicalNumber& a, const RadicalNumber& b) {
  RadicalNumber out;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      Rational s = ia->second + ib->second;
      if (!s.is_zero()) out.terms_.emplace_back(ia->first, s);
      ++ia;
      ++ib;
    }
  }
  return out;
}

RadicalNumber operator-(const RadicalNumber& a, const RadicalNumber& b) { return a + (-b); }

RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b) {
  RadicalNumber out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra) * sqrt(rb) = g * sqrt(ra/g * rb/g) for squarefree ra, rb.
      const std::int64_t g = std::gcd(ra, rb);
      RadicalNumber term;
      term.terms_.emplace_back(checked_mul(ra / g, rb / g), ca * cb * Rational(g));
      out = out + term;
    }
  }
  return out;
}

}  // namespace gridstate
