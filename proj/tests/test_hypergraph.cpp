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
#include "gridstate/hypergraph.hpp"
#include "gridstate/prover.hpp"
#include "oracles.hpp"

using namespace gridstate;

TEST_CASE("crosshatch state") {
  const GridHypergraph ch = crosshatch();
  CHECK(ch.dims() == Bipartition{3, 3});
  const DensityMatrix rho = build_state(ch);
  CHECK(rho.m.trace().real() == doctest::Approx(1.0));
  CHECK(is_hermitian(rho.m, 1e-14));
  CHECK(min_eigenvalue(rho.m) >= -1e-12);
  CHECK(oracle::min_eig(oracle::pt_B(rho.m, 3, 3)) >= -1e-12);
  // Edge vectors span the range.
  CHECK(numeric_rank(rho.m) == numeric_rank(ch.edge_matrix()));
}

TEST_CASE("flip graph swaps the B index of two-vertex edges") {
  const GridHypergraph g(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}, {1, 1}})});
  const FlatGraph f = flatten_to_graph(g);
  const FlatGraph flipped = flip_graph(f);
  // |00>+|11> becomes an edge between 01 and 10 after the flip.
  CHECK(f.adjacency.count({0, 3}) + f.adjacency.count({3, 0}) > 0);
  CHECK(flipped.adjacency.count({1, 2}) + flipped.adjacency.count({2, 1}) > 0);
}

TEST_CASE("maximally entangled edge is NPT") {
  const GridHypergraph g(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}, {1, 1}})});
  const PptVerdict v = graphical_ppt_check(g);
  CHECK(v.status == PptStatus::Npt);
  CHECK(!v.numeric_ppt);
  CHECK(v.min_eigenvalue_pt < 0.0);
}

TEST_CASE("graphical verdict never contradicts the numeric one") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 300; ++t) {
    const GridHypergraph h = oracle::random_hypergraph(gen);
    const PptVerdict v = graphical_ppt_check(h);
    const DensityMatrix rho = build_state(h);
    const bool numeric = oracle::min_eig(oracle::pt_B(rho.m, rho.dims.dA, rho.dims.dB)) >= -1e-10;
    CHECK(v.numeric_ppt == numeric);
    if (v.status == PptStatus::PptGraphical) CHECK(numeric);
    if (v.status == PptStatus::Npt) CHECK(!numeric);
  }
}

TEST_CASE("decomposition upper bound") {
  CHECK(sn_upper_from_decomposition(crosshatch()) == 2);
  CHECK(sn_upper_from_decomposition(rho_5_5()) == 3);
  const GridHypergraph prod(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}}), WeightedEdge::uniform({{1, 1}})});
  CHECK(sn_upper_from_decomposition(prod) == 1);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(GridHypergraph(Bipartition{2, 2}, {WeightedEdge::uniform({{2, 0}})}), Error);
  CHECK(isolated_vertices(GridHypergraph(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}})})).size() == 3);
}
