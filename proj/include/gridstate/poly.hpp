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

// Sparse multivariate polynomials with exact radical coefficients, and
// symbolic determinants of small matrices of them.

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gridstate/exact.hpp"
#include "gridstate/linalg.hpp"

namespace gridstate {

/// Multiset of variable ids, kept sorted.
using Monomial = std::vector<int>;

class Poly {
 public:
  Poly() = default;
  static Poly constant(const RadicalNumber& c);
  static Poly variable(int id, const RadicalNumber& c = RadicalNumber(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, RadicalNumber>& terms() const { return terms_; }
  int degree() const;
  std::set<int> variables() const;

  /// Drop every term that contains an erased variable (set them to zero).
  Poly erase(const std::set<int>& erased) const;
  /// Reduce modulo x*y = 1 for the given pair of variable ids.
  Poly reduce_unit_product(int x, int y) const;

  cplx evaluate(const std::function<cplx(int)>& value) const;
  std::string to_string(const std::function<std::string(int)>& name) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const RadicalNumber& c);
  std::map<Monomial, RadicalNumber> terms_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Exact determinant of the submatrix on the given rows and columns, by
/// cofactor expansion along the sparsest remaining row.
Poly determinant(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Calls f(rows, cols) for every size x size index pair in lexicographic order.
void for_each_submatrix(int nrows, int ncols, int size,
                        const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f);

}  // namespace gridstate
