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

#include "doctest.h"
#include "gridstate/concentrate.hpp"
#include "gridstate/error.hpp"
#include "oracles.hpp"

using namespace gridstate;

TEST_CASE("crosshatch context is valid") {
  const ThetaContext ctx = crosshatch_context();
  CHECK_NOTHROW(validate_context(ctx));
  CHECK(ctx.rho.dims == Bipartition{3, 3});
  CHECK(std::abs(ctx.t) > 1e-6);
  CHECK((ctx.sigma + ctx.v * ctx.v.adjoint() - ctx.rho.m).norm() < 1e-12);
}

TEST_CASE("a broken context is rejected") {
  ThetaContext ctx = crosshatch_context();
  ctx.sigma = ctx.rho.m;
  CHECK_THROWS_AS(validate_context(ctx), Error);
}

TEST_CASE("one application of Theta") {
  const ThetaResult r = apply_theta(crosshatch_context());
  CHECK(r.dims == Bipartition{5, 6});
  CHECK(r.state.m.trace().real() == doctest::Approx(1.0));
  CHECK(oracle::min_eig(r.state.m) >= -1e-10);
  CHECK(oracle::min_eig(oracle::pt_B(r.state.m, 5, 6)) >= -1e-10);
  CHECK(r.nesting_residual < 1e-10);
  CHECK(r.next_v_schmidt_rank == 3);
  CHECK_NOTHROW(validate_context(r.next));
}

TEST_CASE("family recursions") {
  const Family f = build_family(3);
  REQUIRE(f.members.size() == 3);
  for (const auto& m : f.members) {
    const int n = m.n;
    CHECK(m.state.dims == Bipartition{2 * n + 1, (n + 1) * (n + 2) / 2});
    CHECK(m.render_residual < 1e-10);
    CHECK(m.sn_label == n + 1);
  }
  const StructuralEvidence ev = structural_evidence(f, 3);
  CHECK(ev.nesting_ok);
  CHECK(ev.ppt_ok);
  CHECK(ev.dims_ok);
}

TEST_CASE("horodecki analysis") {
  const HorodeckiAnalysis h = analyze_horodecki();
  CHECK(h.kernels_verified);
  CHECK(h.entangled);
  const DensityMatrix rho = horodecki();
  CHECK(oracle::min_eig(oracle::pt_B(rho.m, rho.dims.dA, rho.dims.dB)) >= -1e-12);
}

TEST_CASE("4x12 certificate rejects a perturbed input") {
  DensityMatrix rho = build_4x12();
  CHECK(certify_sn3_4x12(rho).pass);
  rho.m(0, 0) += 0.01;
  rho.m /= rho.m.trace().real();
  CHECK(!certify_sn3_4x12(rho).pass);
}
