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
#include "gridstate/dps.hpp"
#include "gridstate/concentrate.hpp"
#include "gridstate/error.hpp"
#include "gridstate/extremal.hpp"
#include "gridstate/hypergraph.hpp"
#include "gridstate/prover.hpp"
#include "oracles.hpp"

using namespace gridstate;

TEST_CASE("symmetric subspace") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 0) == 1);
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n) {
      const SymmetricSpace s = sym_projector(d, n);
      CHECK(s.dim() == binomial(d + n - 1, n));
      CHECK((s.projector * s.projector - s.projector).norm() < 1e-12);
      CHECK(s.projector.trace().real() == doctest::Approx(s.dim()));
      CHECK((s.isometry.adjoint() * s.isometry - CMatrix::Identity(s.dim(), s.dim())).norm() < 1e-12);
      CHECK((s.isometry * s.isometry.adjoint() - s.projector).norm() < 1e-12);
      // Invariant under the adjacent transposition.
      if (n >= 2) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[1]);
        const CMatrix P = permutation_operator(d, perm);
        CHECK((P * s.projector - s.projector).norm() < 1e-12);
      }
    }
  CHECK(occupation_vectors(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("compressed objective equals the lifted witness") {
  std::mt19937_64 gen(12);
  for (const auto& [dA, dB, n] : std::vector<std::tuple<int, int, int>>{{3, 3, 2}, {2, 3, 3}, {3, 2, 2}, {3, 3, 1}}) {
    const CMatrix h = CMatrix::Random(dA * dB, dA * dB);
    const CMatrix W = h + h.adjoint();
    const DpsProblem prob = assemble(W, {dA, dB}, n);
    const int K = prob.keep_dim, E = prob.ext_dim;
    // W on keep (x) ext, then (1 (x) V)^dag (W (x) 1) (1 (x) V).
    CMatrix Wk(K * E, K * E);
    const Bipartition p{dA, dB};
    for (int r = 0; r < K * E; ++r)
      for (int c = 0; c < K * E; ++c) {
        auto idx = [&](int x) {
          const int k = x / E, e = x % E;
          return prob.extended_side == Side::A ? e * dB + k : k * dB + e;
        };
        Wk(r, c) = W(idx(r), idx(c));
      }
    int rest = 1;
    for (int i = 1; i < n; ++i) rest *= E;
    const CMatrix lifted = tensor(Wk, CMatrix::Identity(rest, rest));
    const SymmetricSpace s = sym_projector(E, n);
    const CMatrix V = tensor(CMatrix::Identity(K, K), s.isometry);
    CHECK((V.adjoint() * lifted * V - prob.W_hat).norm() < 1e-10);
  }
}

TEST_CASE("product witness bound is tight at level 1") {
  std::mt19937_64 gen(13);
  const CVector a = oracle::random_unit(2, gen), b = oracle::random_unit(3, gen);
  const CVector ab = tensor(a, b);
  const CMatrix W = ab * ab.adjoint() + 0.5 * CMatrix::Identity(6, 6);
  const DpsResult r = solve(assemble(W, {2, 3}, 1));
  CHECK(r.converged);
  CHECK(r.mu_U == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(r.mu_U >= 1.5 - 1e-12);
}

TEST_CASE("bound is sound and at most the top eigenvalue") {
  std::mt19937_64 gen(14);
  for (int t = 0; t < 4; ++t) {
    const CMatrix rho = oracle::random_density(9, 3, gen);
    SolverConfig cfg;
    cfg.record_trace = true;
    const DpsResult r = solve(assemble(rho, {3, 3}, 2), cfg);
    CHECK(r.mu_U <= max_eigenvalue(rho) + 1e-12);
    // Any product vector is feasible, so the bound sits above all of them.
    for (int i = 0; i < 50; ++i) {
      const CVector xy = tensor(oracle::random_unit(3, gen), oracle::random_unit(3, gen));
      CHECK(r.mu_U >= (xy.adjoint() * rho * xy)(0).real() - 1e-12);
    }
    CHECK(!r.trace_rows.empty());
    CHECK(trace_csv(r.trace_rows).rfind("iteration,objective,primal_residual,dual_residual", 0) == 0);
  }
}

TEST_CASE("crosshatch level 1 gives 2") {
  const DensityMatrix rho = build_state(crosshatch());
  const DpsResult r = solve(assemble(build_witness(range_pair(rho)), rho.dims, 1));
  CHECK(r.mu_U == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("level caps") {
  const CMatrix W = CMatrix::Identity(9, 9);
  CHECK(level_cap(3) == 8);
  CHECK_THROWS_AS(assemble(W, {3, 3}, 9), Error);
  CHECK_THROWS_AS(assemble(W, {3, 3}, 0), Error);
  CHECK_THROWS_AS(assemble(W, {3, 2}, 1), Error);
}
