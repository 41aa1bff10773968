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

#include <random>

#include "doctest.h"
#include "gridstate/concentrate.hpp"
#include "gridstate/error.hpp"
#include "gridstate/io.hpp"
#include "gridstate/poly.hpp"
#include "gridstate/prover.hpp"
#include "oracles.hpp"

using namespace gridstate;

namespace {

// Leibniz expansion on a small numeric matrix.
cplx leibniz(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  cplx total = 0.0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    cplx term = inv % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Poly x = Poly::variable(0), y = Poly::variable(1);
  const Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.erase({1}) == x * x);
  CHECK(p.variables() == std::set<int>{0, 1});
  CHECK((x * y).reduce_unit_product(0, 1) == Poly::constant(RadicalNumber(1)));
  const cplx v = p.evaluate([](int id) { return id == 0 ? cplx(2.0) : cplx(0.0, 1.0); });
  CHECK(std::abs(v - cplx(5.0)) < 1e-14);
}

TEST_CASE("symbolic determinant agrees with Leibniz on random evaluations") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> pick(0, 5), coef(-2, 2);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 4;
    PolyMatrix m(n, std::vector<Poly>(n));
    for (auto& row : m)
      for (auto& c : row) {
        const int which = pick(gen);
        if (which < 3) c = Poly::variable(which, RadicalNumber(coef(gen)));
        else if (which == 3) c = Poly::constant(RadicalNumber(coef(gen)));
      }
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    const Poly det = determinant(m, idx, idx);
    const std::vector<cplx> vals = {cplx(nd(gen), nd(gen)), cplx(nd(gen), nd(gen)), cplx(nd(gen), nd(gen))};
    auto value = [&](int id) { return vals[id]; };
    CMatrix num(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num(i, j) = m[i][j].evaluate(value);
    CHECK(std::abs(det.evaluate(value) - leibniz(num)) < 1e-9);
  }
}

TEST_CASE("submatrix enumeration count") {
  int count = 0;
  for_each_submatrix(4, 5, 2, [&](const std::vector<int>&, const std::vector<int>&) { ++count; });
  CHECK(count == 6 * 10);
}

TEST_CASE("crosshatch certificate structure") {
  const ProofTree t = prove_sn_exceeds(crosshatch(), 1, 0);
  REQUIRE(t.certified);
  CHECK(t.nodes[0].status == NodeStatus::Branch);
  CHECK(t.var_names.size() == 4);
  for (const auto& n : t.nodes)
    if (n.status != NodeStatus::Branch) CHECK(n.status == NodeStatus::TargetErased);
  CHECK(replay_proof(crosshatch(), t).ok);
}

TEST_CASE("proof JSON round trip replays") {
  const ProofTree t = prove_sn_exceeds(rho_5_5(), 2, 12);
  const ProofTree back = proof_from_json(proof_to_json(t));
  CHECK(back.nodes.size() == t.nodes.size());
  CHECK(replay_proof(rho_5_5(), back).ok);
}

TEST_CASE("prover gets stuck on a product state") {
  const GridHypergraph g(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}}), WeightedEdge::uniform({{1, 1}})});
  const ProofTree t = prove_sn_exceeds(g, 1, 0);
  CHECK(!t.certified);
  CHECK(falsify_by_sampling(g, 1, 0, 10, 1).has_value());
}

TEST_CASE("node budget") {
  ProverOptions o;
  o.node_budget = 3;
  const ProofTree t = prove_sn_exceeds(rho_5_5(), 2, 12, o);
  CHECK(!t.certified);
  CHECK(t.budget_exhausted);
}

TEST_CASE("replay rejects a tree for another state") {
  const ProofTree t = prove_sn_exceeds(crosshatch(), 1, 0);
  CHECK(!replay_proof(rho_5_5(), t).ok);
}

TEST_CASE("invalid prover arguments") {
  CHECK_THROWS_AS(prove_sn_exceeds(crosshatch(), 0, 0), Error);
  CHECK_THROWS_AS(prove_sn_exceeds(crosshatch(), 1, 99), Error);
}
