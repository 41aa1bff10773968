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
#include "gridstate/extremal.hpp"
#include "gridstate/hypergraph.hpp"
#include "gridstate/prover.hpp"
#include "oracles.hpp"

using namespace gridstate;

TEST_CASE("generalized Gell-Mann coordinates round trip") {
  std::mt19937_64 gen(4);
  for (int d = 1; d <= 6; ++d) {
    const CMatrix a = CMatrix::Random(d, d);
    const CMatrix h = a + a.adjoint();
    const RVector x = hermitian_to_ggm(h);
    CHECK(x.size() == d * d);
    CHECK((ggm_to_hermitian(x, d) - h).norm() < 1e-12);
    // The basis is orthonormal, so coordinates preserve the Frobenius norm.
    CHECK(x.norm() == doctest::Approx(h.norm()));
  }
}

TEST_CASE("dense and kernel routes agree") {
  const DensityMatrix rho = build_state(crosshatch());
  const ExtremalityVerdict a = extremality_test(rho, kDefaultRangeTol, ExtremalMethod::Dense);
  const ExtremalityVerdict b = extremality_test(rho, kDefaultRangeTol, ExtremalMethod::Kernel);
  CHECK(a.dense);
  CHECK(!b.dense);
  CHECK(a.multiplicity_of_2 == b.multiplicity_of_2);
  CHECK(a.second_eigenvalue_gap == doctest::Approx(b.second_eigenvalue_gap).epsilon(1e-6));
  CHECK(a.alignment == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("NPT input is refused") {
  const GridHypergraph g(Bipartition{2, 2}, {WeightedEdge::uniform({{0, 0}, {1, 1}})});
  try {
    extremality_test(build_state(g));
    FAIL("expected NotPpt");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPpt);
  }
}

TEST_CASE("witness") {
  const DensityMatrix rho = build_state(rho_5_5());
  const RangePair rp = range_pair(rho);
  CHECK(rp.rank_P == numeric_rank(rho.m));
  CHECK(rp.rank_Q == numeric_rank(oracle::pt_B(rho.m, 5, 5)));
  const CMatrix W = build_witness(rp);
  CHECK((W * rho.m).trace().real() == doctest::Approx(2.0));
  CHECK(is_hermitian(W, 1e-12));
  const CMatrix I = indecomposable_witness(rp, 1.95);
  CHECK((I * rho.m).trace().real() == doctest::Approx(-0.05));
  CHECK_THROWS_AS(indecomposable_witness(rp, 2.5), Error);
}
