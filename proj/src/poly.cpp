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

#include "gridstate/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gridstate {

Poly Poly::constant(const RadicalNumber& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(int id, const RadicalNumber& c) {
  Poly p;
  p.add_term({id}, c);
  return p;
}

void Poly::add_term(const Monomial& m, const RadicalNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Poly::degree() const {
  size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return static_cast<int>(d);
}

std::set<int> Poly::variables() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

Poly Poly::erase(const std::set<int>& erased) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const bool hit = std::any_of(m.begin(), m.end(), [&](int v) { return erased.count(v) > 0; });
    if (!hit) out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::reduce_unit_product(int x, int y) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const auto nx = std::count(m.begin(), m.end(), x);
    const auto ny = std::count(m.begin(), m.end(), y);
    const auto cancel = std::min(nx, ny);
    Monomial reduced;
    long dropped_x = 0, dropped_y = 0;
    for (int v : m) {
      if (v == x && dropped_x < cancel) {
        ++dropped_x;
        continue;
      }
      if (v == y && dropped_y < cancel) {
        ++dropped_y;
        continue;
      }
      reduced.push_back(v);
    }
    out.add_term(reduced, c);
  }
  return out;
}

cplx Poly::evaluate(const std::function<cplx(int)>& value) const {
  cplx acc = 0;
  for (const auto& [m, c] : terms_) {
    cplx t = c.to_double();
    for (int v : m) t *= value(v);
    acc += t;
  }
  return acc;
}

std::string Poly::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c == RadicalNumber(1);
    if (!unit || m.empty()) os << (c.is_rational() && c.sign() >= 0 ? c.to_string() : "(" + c.to_string() + ")");
    for (size_t k = 0; k < m.size();) {
      size_t run = k;
      while (run < m.size() && m[run] == m[k]) ++run;
      if (!unit || k > 0) os << "*";
      os << name(m[k]);
      if (run - k > 1) os << "^" << (run - k);
      k = run;
    }
  }
  return os.str();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly determinant(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t n = rows.size();
  if (n == 0) return Poly::constant(RadicalNumber(1));
  if (n == 1) return m[rows[0]][cols[0]];
  // Sparsest row keeps the expansion small; isolated vertices make zero cells.
  size_t pivot = 0, best = n + 1;
  for (size_t r = 0; r < n; ++r) {
    size_t nz = 0;
    for (size_t c = 0; c < n; ++c) nz += !m[rows[r]][cols[c]].is_zero();
    if (nz < best) {
      best = nz;
      pivot = r;
    }
  }
  Poly out;
  if (best == 0) return out;
  std::vector<int> sub_rows;
  for (size_t r = 0; r < n; ++r)
    if (r != pivot) sub_rows.push_back(rows[r]);
  for (size_t c = 0; c < n; ++c) {
    const Poly& cell = m[rows[pivot]][cols[c]];
    if (cell.is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t k = 0; k < n; ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Poly minor = determinant(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    Poly term = cell * minor;
    if ((pivot + c) % 2) term = -term;
    out += term;
  }
  return out;
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int p = k - 1; p >= 0; --p) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_submatrix(int nrows, int ncols, int size,
                        const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
  if (size <= 0 || size > nrows || size > ncols) return;
  std::vector<int> rows(size);
  for (int k = 0; k < size; ++k) rows[k] = k;
  do {
    std::vector<int> cols(size);
    for (int k = 0; k < size; ++k) cols[k] = k;
    do {
      f(rows, cols);
    } while (next_combination(cols, ncols));
  } while (next_combination(rows, nrows));
}

}  // namespace gridstate
