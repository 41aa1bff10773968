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

#include "gridstate/concentrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "gridstate/error.hpp"

namespace gridstate {

GridHypergraph crosshatch() {
  return GridHypergraph({3, 3}, {
                                    WeightedEdge::uniform({{1, 0}, {0, 2}}, "c10"),
                                    WeightedEdge::uniform({{2, 0}, {1, 2}}, "c20"),
                                    WeightedEdge::uniform({{0, 0}, {2, 1}}, "c00"),
                                    WeightedEdge::uniform({{0, 1}, {2, 2}}, "c01"),
                                });
}

GridHypergraph rho_5_5() {
  return GridHypergraph({5, 5}, {
                                    WeightedEdge::uniform({{0, 0}}, "c00"),
                                    WeightedEdge::uniform({{0, 1}}, "c01"),
                                    WeightedEdge::uniform({{1, 0}}, "c10"),
                                    WeightedEdge::uniform({{2, 3}}, "c23"),
                                    WeightedEdge::uniform({{2, 3}}, "c23"),
                                    WeightedEdge::uniform({{3, 2}}, "c32"),
                                    WeightedEdge::uniform({{3, 2}}, "c32"),
                                    WeightedEdge::uniform({{1, 4}}, "c14"),
                                    WeightedEdge::uniform({{4, 1}}, "c41"),
                                    WeightedEdge::uniform({{2, 1}, {4, 3}}, "c21"),
                                    WeightedEdge::uniform({{2, 2}, {3, 3}}, "c22"),
                                    WeightedEdge::uniform({{1, 2}, {3, 4}}, "c12"),
                                    WeightedEdge::uniform({{0, 2}, {1, 1}, {2, 0}}, "c11"),
                                });
}

GridHypergraph horodecki_hypergraph() {
  WeightedEdge weighted;
  weighted.vertices = {{1, 3}, {1, 0}};
  weighted.amplitudes = {Amplitude(1, 1, 2), Amplitude::one()};
  weighted.label = "h4";
  return GridHypergraph({2, 4}, {
                                    WeightedEdge::uniform({{0, 0}}, "h0"),
                                    WeightedEdge::uniform({{0, 1}, {1, 0}}, "h1"),
                                    WeightedEdge::uniform({{0, 2}, {1, 1}}, "h2"),
                                    WeightedEdge::uniform({{0, 3}, {1, 2}}, "h3"),
                                    weighted,
                                });
}

DensityMatrix horodecki() { return build_state(horodecki_hypergraph()); }

GridHypergraph rho_4_12_hypergraph() {
  // Alice (a1, a2) at a1 * 3 + a2; Pi_A removes a1 = 1 with a2 in {0, 2}.
  const std::vector<int> rows = {0, 1, 3, -1, 2, -1};
  std::vector<int> cols(12);
  for (int b1 = 0; b1 < 4; ++b1)
    for (int b2 = 0; b2 < 3; ++b2) cols[b1 * 3 + b2] = b1 + 4 * b2;
  return product_hypergraph(horodecki_hypergraph(), crosshatch(), rows, cols, {4, 12});
}

DensityMatrix build_4x12() { return build_state(rho_4_12_hypergraph()); }

void validate_context(const ThetaContext& ctx, double tol) {
  const Bipartition p = ctx.rho.dims;
  auto bad = [](const std::string& what) { fail(ErrorCode::ContextViolation, "theta context: " + what); };
  if (ctx.rho.m.rows() != p.dim() || ctx.sigma.rows() != p.dim() || ctx.v.size() != p.dim())
    bad("dimension mismatch");
  if (ctx.alpha.size() != p.dA || ctx.beta.size() != p.dB) bad("alpha/beta dimension mismatch");
  if (std::abs(ctx.alpha.norm() - 1.0) > tol || std::abs(ctx.beta.norm() - 1.0) > tol) bad("alpha and beta must be unit vectors");
  if ((ctx.rho.m - ctx.sigma - ctx.v * ctx.v.adjoint()).norm() > tol) bad("rho != sigma + |v><v|");
  if (std::abs(ctx.v.dot(ctx.sigma * ctx.v)) > tol) bad("<v|sigma|v> != 0");
  const CVector ab = tensor(ctx.alpha, ctx.beta);
  if ((ctx.sigma * ab).norm() > tol) bad("sigma |alpha beta> != 0");
  if (std::abs(ab.dot(ctx.v) - ctx.t) > tol) bad("t != <alpha beta|v>");
  if (std::abs(ctx.t) <= tol) bad("t must be nonzero");
  if (min_eigenvalue(ctx.sigma) < -tol) bad("sigma is not positive semidefinite");
}

ThetaContext crosshatch_context() {
  const GridHypergraph ch = crosshatch();
  ThetaContext ctx;
  ctx.rho = build_state(ch);
  ctx.v = ch.edge_vector(0) / std::sqrt(8.0);
  ctx.sigma = ctx.rho.m - ctx.v * ctx.v.adjoint();
  ctx.alpha = CVector::Unit(3, 1);
  ctx.beta = CVector::Unit(3, 0);
  ctx.t = ctx.v(1 * 3 + 0);
  ctx.k = 2;
  return ctx;
}

namespace {

// Index of the single unit entry, or -1 when v is not a basis vector.
int basis_index(const CVector& v) {
  int idx = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) == 0.0) continue;
    if (idx >= 0 || std::abs(std::abs(v(i)) - 1.0) > 1e-14) return -1;
    idx = static_cast<int>(i);
  }
  return idx;
}

int anchor(const CVector& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return static_cast<int>(idx);
}

struct Column {
  std::pair<int, int> key;  // (local index, register value) for ordering
  CVector vec;
};

CMatrix stack(std::vector<Column>& cols, Eigen::Index rows) {
  std::stable_sort(cols.begin(), cols.end(), [](const Column& x, const Column& y) { return x.key < y.key; });
  CMatrix out(rows, static_cast<Eigen::Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = cols[c].vec;
  return out;
}

int find_key(const std::vector<Column>& cols, std::pair<int, int> key) {
  for (size_t c = 0; c < cols.size(); ++c)
    if (cols[c].key == key) return static_cast<int>(c);
  return -1;
}

CVector embed(const CVector& local, int reg) {
  return tensor(local, CVector(CVector::Unit(3, reg)));
}

}  // namespace

ThetaResult apply_theta(const ThetaContext& ctx, double tol) {
  validate_context(ctx, tol);
  const int dA = ctx.rho.dims.dA, dB = ctx.rho.dims.dB;
  const DensityMatrix ch = build_state(crosshatch());
  ThetaResult res;
  const int a_idx = basis_index(ctx.alpha), b_idx = basis_index(ctx.beta);
  res.basis_aligned = a_idx >= 0 && b_idx >= 0;

  // rho (x) rho_CH reordered to (A1 A2)(B1 B2).
  const int DA = 3 * dA, DB = 3 * dB;
  CMatrix big(DA * DB, DA * DB);
  for (int a1 = 0; a1 < dA; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      for (int b1 = 0; b1 < dB; ++b1)
        for (int b2 = 0; b2 < 3; ++b2) {
          const int row = (a1 * 3 + a2) * DB + b1 * 3 + b2;
          for (int c1 = 0; c1 < dA; ++c1)
            for (int c2 = 0; c2 < 3; ++c2)
              for (int e1 = 0; e1 < dB; ++e1)
                for (int e2 = 0; e2 < 3; ++e2)
                  big(row, (c1 * 3 + c2) * DB + e1 * 3 + e2) =
                      ctx.rho.m(a1 * dB + b1, c1 * dB + e1) * ch.m(a2 * 3 + b2, c2 * 3 + e2);
        }

  // Range isometry of Alice's filter.
  const int a_anchor = res.basis_aligned ? a_idx : anchor(ctx.alpha);
  std::vector<Column> acols;
  for (int a1 = 0; a1 < dA; ++a1) acols.push_back({{a1, 1}, embed(CVector::Unit(dA, a1), 1)});
  acols.push_back({{a_anchor, 0}, embed(ctx.alpha, 0)});
  acols.push_back({{a_anchor, 2}, embed(ctx.alpha, 2)});
  const CMatrix WA = stack(acols, DA);

  // Bob's B2 = 1 block is cut down to the support it actually has.
  CMatrix E1(DB, dB);
  for (int b = 0; b < dB; ++b) E1.col(b) = embed(CVector::Unit(dB, b), 1);
  const CMatrix K1 = tensor(WA, E1);
  const CMatrix block = K1.adjoint() * big * K1;
  CMatrix R1 = CMatrix::Zero(dB, dB);
  for (int r = 0; r < WA.cols(); ++r) R1 += block.block(r * dB, r * dB, dB, dB);
  R1 = (0.5 * (R1 + R1.adjoint())).eval();

  const int b_anchor = res.basis_aligned ? b_idx : anchor(ctx.beta);
  std::vector<Column> bcols;
  for (int b1 = 0; b1 < dB; ++b1) bcols.push_back({{b1, 0}, embed(CVector::Unit(dB, b1), 0)});
  bcols.push_back({{b_anchor, 2}, embed(ctx.beta, 2)});
  const double r1_scale = std::max(R1.trace().real(), 1e-300);
  if (res.basis_aligned) {
    for (int b1 = 0; b1 < dB; ++b1)
      if (R1(b1, b1).real() > 1e-12 * r1_scale) {
        bcols.push_back({{b1, 1}, embed(CVector::Unit(dB, b1), 1)});
        ++res.r_B;
      }
  } else {
    const CMatrix U = range_basis(R1, 1e-10);
    for (Eigen::Index m = 0; m < U.cols(); ++m) {
      // Non-basis filters put the trimmed block last.
      bcols.push_back({{dB + static_cast<int>(m), 1}, embed(U.col(m), 1)});
      ++res.r_B;
    }
  }
  const CMatrix WB = stack(bcols, DB);

  const CMatrix K = tensor(WA, WB);
  CMatrix out = K.adjoint() * big * K;
  out = (0.5 * (out + out.adjoint())).eval();
  res.normalization = out.trace().real();
  res.dims = {static_cast<int>(WA.cols()), static_cast<int>(WB.cols())};
  res.state = {out / res.normalization, res.dims};

  for (int a1 = 0; a1 < dA; ++a1) res.row_of_a1.push_back(find_key(acols, {a1, 1}));
  for (int b1 = 0; b1 < dB; ++b1) res.col_of_b1.push_back(find_key(bcols, {b1, 0}));

  // Nesting: the |10> corner on A2 B2 is rho up to scale.
  const int dBo = res.dims.dB;
  CMatrix sub(dA * dB, dA * dB);
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int c = 0; c < dA; ++c)
        for (int e = 0; e < dB; ++e)
          sub(a * dB + b, c * dB + e) =
              res.state.m(res.row_of_a1[a] * dBo + res.col_of_b1[b], res.row_of_a1[c] * dBo + res.col_of_b1[e]);
  res.nesting_scale = sub.trace().real() / ctx.rho.m.trace().real();
  if (!(res.nesting_scale > 0)) fail(ErrorCode::Internal, "nesting projection vanished");
  res.nesting_residual = (sub / res.nesting_scale - ctx.rho.m).norm();
  if (res.nesting_residual > 1e-8) fail(ErrorCode::Internal, "nesting property failed after Theta");

  res.min_pt_eigenvalue = min_eigenvalue(partial_transpose(res.state.m, res.dims, Side::B));

  // Next context: w = v|10> + t |alpha beta>|02>.
  CVector w = CVector::Zero(DA * DB);
  for (int a1 = 0; a1 < dA; ++a1)
    for (int b1 = 0; b1 < dB; ++b1) {
      w((a1 * 3 + 1) * DB + b1 * 3 + 0) += ctx.v(a1 * dB + b1);
      w((a1 * 3 + 0) * DB + b1 * 3 + 2) += ctx.t * ctx.alpha(a1) * ctx.beta(b1);
    }
  const CVector w_out = K.adjoint() * w;
  if ((K * w_out - w).norm() > 1e-10 * std::max(1.0, w.norm())) fail(ErrorCode::Internal, "w left the filtered space");

  ThetaContext& next = res.next;
  next.rho = res.state;
  // rho_CH carries 1/8 from its four two-vertex edges.
  next.v = w_out / std::sqrt(8.0 * res.normalization);
  next.sigma = res.state.m - next.v * next.v.adjoint();
  next.alpha = WA.adjoint() * embed(ctx.alpha, 1);
  next.beta = WB.adjoint() * embed(ctx.beta, 0);
  next.t = tensor(next.alpha, next.beta).dot(next.v);
  next.k = ctx.k + 1;
  validate_context(next, std::max(tol, 1e-9));
  res.next_v_schmidt_rank = schmidt_rank(next.v, res.dims, 1e-9);
  return res;
}

GridHypergraph theta_hypergraph(const GridHypergraph& h, int a, int b,
                                std::vector<std::pair<size_t, size_t>>* origin) {
  const int dA = h.dims().dA, dB = h.dims().dB;
  if (a < 0 || a >= dA || b < 0 || b >= dB) fail(ErrorCode::InvalidArgument, "filter index outside the grid");
  std::vector<char> support(dB, 0);
  for (const auto& e : h.edges())
    for (const auto& v : e.vertices)
      if (v.i == a) support[v.j] = 1;
  std::vector<int> rows(dA * 3, -1), cols(dB * 3, -1);
  int nr = 0, nc = 0;
  for (int a1 = 0; a1 < dA; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      if (a2 == 1 || a1 == a) rows[a1 * 3 + a2] = nr++;
  for (int b1 = 0; b1 < dB; ++b1)
    for (int b2 = 0; b2 < 3; ++b2)
      if (b2 == 0 || (b2 == 1 && support[b1]) || (b2 == 2 && b1 == b)) cols[b1 * 3 + b2] = nc++;
  return product_hypergraph(h, crosshatch(), rows, cols, {nr, nc}, origin);
}

namespace {

int row_support(const GridHypergraph& h, int a) {
  std::vector<char> support(h.dims().dB, 0);
  for (const auto& e : h.edges())
    for (const auto& v : e.vertices)
      if (v.i == a) support[v.j] = 1;
  return static_cast<int>(std::count(support.begin(), support.end(), 1));
}

}  // namespace

Family build_family(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "family index n must be at least 1");
  Family fam;
  ThetaContext ctx = crosshatch_context();
  fam.contexts.push_back(ctx);
  {
    FamilyMember m;
    m.n = 1;
    m.graph = crosshatch();
    m.state = build_state(m.graph);
    m.target_edge = 0;
    m.sn_label = 2;
    m.r_B = row_support(m.graph, 1);
    m.min_pt_eigenvalue = min_eigenvalue(partial_transpose(m.state.m, m.state.dims));
    fam.members.push_back(std::move(m));
  }
  for (int step = 2; step <= n; ++step) {
    const FamilyMember& prev = fam.members.back();
    const int a = basis_index(ctx.alpha), b = basis_index(ctx.beta);
    const ThetaResult res = apply_theta(ctx);
    if (res.r_B != prev.r_B) fail(ErrorCode::Internal, "Bob trimming disagrees with the grid support");
    std::vector<std::pair<size_t, size_t>> origin;
    FamilyMember m;
    m.n = step;
    m.graph = theta_hypergraph(prev.graph, a, b, &origin);
    m.state = res.state;
    m.target_edge = -1;
    for (size_t e = 0; e < origin.size(); ++e)
      if (origin[e] == std::make_pair(static_cast<size_t>(prev.target_edge), size_t{0})) m.target_edge = static_cast<int>(e);
    if (m.target_edge < 0) fail(ErrorCode::Internal, "target edge lost by the filter");
    m.sn_label = prev.sn_label + 1;
    m.nesting_residual = res.nesting_residual;
    m.min_pt_eigenvalue = res.min_pt_eigenvalue;
    m.normalization = res.normalization;
    m.render_residual = (build_state(m.graph).m - res.state.m).cwiseAbs().maxCoeff();
    ctx = res.next;
    m.r_B = row_support(m.graph, basis_index(ctx.alpha));
    fam.contexts.push_back(ctx);
    fam.members.push_back(std::move(m));
  }
  return fam;
}

StructuralEvidence structural_evidence(const Family& f, int n) {
  if (n < 1 || n > static_cast<int>(f.members.size())) fail(ErrorCode::InvalidArgument, "family member out of range");
  StructuralEvidence ev;
  ev.n = n;
  const FamilyMember& m = f.members[n - 1];
  ev.sn_label = m.sn_label;
  ev.nesting_ok = true;
  ev.recursion_ok = true;
  for (int j = 2; j <= n; ++j) {
    const auto& cur = f.members[j - 1];
    const auto& prev = f.members[j - 2];
    ev.nesting_ok = ev.nesting_ok && cur.nesting_residual <= 1e-10;
    ev.recursion_ok = ev.recursion_ok && cur.graph.dims().dB == prev.graph.dims().dB + prev.r_B + 1 &&
                      cur.r_B == prev.r_B + 1 && cur.graph.dims().dA == prev.graph.dims().dA + 2;
  }
  ev.ppt_ok = m.min_pt_eigenvalue >= -1e-10;
  ev.dims_ok = m.graph.dims().dA == 2 * n + 1 && m.graph.dims().dB == (n + 1) * (n + 2) / 2;
  ev.sn_upper = sn_upper_from_decomposition(m.graph);
  const int target_rank = schmidt_rank(m.graph.edge_vector(m.target_edge), m.graph.dims());
  ev.label = "asserted by construction, prover-incomplete";
  std::ostringstream os;
  os << "nesting chain residuals <= 1e-10: " << (ev.nesting_ok ? "yes" : "no");
  ev.lines.push_back(os.str());
  ev.lines.push_back(std::string("PPT (min PT eigenvalue ") + std::to_string(m.min_pt_eigenvalue) + "): " + (ev.ppt_ok ? "yes" : "no"));
  ev.lines.push_back("dims " + std::to_string(m.graph.dims().dA) + "x" + std::to_string(m.graph.dims().dB) +
                     " match (2n+1, (n+1)(n+2)/2): " + (ev.dims_ok ? "yes" : "no"));
  ev.lines.push_back(std::string("d_B and r_B recursions hold along the chain: ") + (ev.recursion_ok ? "yes" : "no"));
  ev.lines.push_back("decomposition upper bound SN <= " + std::to_string(ev.sn_upper) + ", carried edge Schmidt rank " +
                     std::to_string(target_rank));
  ev.lines.push_back("SN label " + std::to_string(ev.sn_label) + " (" + ev.label + ")");
  return ev;
}

}  // namespace gridstate
