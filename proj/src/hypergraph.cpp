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

#include "gridstate/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "gridstate/error.hpp"

namespace gridstate {

WeightedEdge WeightedEdge::uniform(std::vector<Vertex> vs, std::string label) {
  WeightedEdge e;
  e.amplitudes.assign(vs.size(), Amplitude::one());
  e.vertices = std::move(vs);
  e.label = std::move(label);
  return e;
}

bool WeightedEdge::same_vector(const WeightedEdge& o) const {
  if (vertices.size() != o.vertices.size()) return false;
  std::vector<std::pair<Vertex, Amplitude>> a, b;
  for (size_t k = 0; k < vertices.size(); ++k) a.emplace_back(vertices[k], amplitudes[k]);
  for (size_t k = 0; k < o.vertices.size(); ++k) b.emplace_back(o.vertices[k], o.amplitudes[k]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

GridHypergraph::GridHypergraph(Bipartition dims, std::vector<WeightedEdge> edges)
    : dims_(dims), edges_(std::move(edges)) {
  if (dims_.dA <= 0 || dims_.dB <= 0) fail(ErrorCode::InvalidArgument, "local dimensions must be positive");
  for (size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    const std::string where = "edge " + std::to_string(e);
    if (edge.vertices.empty()) fail(ErrorCode::InvalidArgument, where + " has no vertices");
    if (edge.amplitudes.empty()) edge.amplitudes.assign(edge.vertices.size(), Amplitude::one());
    if (edge.amplitudes.size() != edge.vertices.size())
      fail(ErrorCode::InvalidArgument, where + ": amplitude count does not match vertex count");
    std::set<Vertex> seen;
    for (const Vertex& v : edge.vertices) {
      if (v.i < 0 || v.i >= dims_.dA || v.j < 0 || v.j >= dims_.dB)
        fail(ErrorCode::InvalidArgument, where + ": vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                                             ") outside the grid");
      if (!seen.insert(v).second) fail(ErrorCode::InvalidArgument, where + ": repeated vertex");
    }
  }
}

CVector GridHypergraph::edge_vector(size_t e) const {
  CVector v = CVector::Zero(dims_.dim());
  const auto& edge = edges_.at(e);
  for (size_t k = 0; k < edge.vertices.size(); ++k) v(flat(edge.vertices[k])) = edge.amplitudes[k].value();
  return v;
}

CMatrix GridHypergraph::edge_matrix() const {
  CMatrix m(dims_.dim(), static_cast<Eigen::Index>(edges_.size()));
  for (size_t e = 0; e < edges_.size(); ++e) m.col(static_cast<Eigen::Index>(e)) = edge_vector(e);
  return m;
}

bool operator==(const GridHypergraph& a, const GridHypergraph& b) {
  if (!(a.dims_ == b.dims_) || a.edges_.size() != b.edges_.size()) return false;
  for (size_t e = 0; e < a.edges_.size(); ++e) {
    const auto& x = a.edges_[e];
    const auto& y = b.edges_[e];
    if (x.vertices != y.vertices || x.amplitudes != y.amplitudes || x.label != y.label) return false;
  }
  return true;
}

CMatrix unnormalized_state(const GridHypergraph& h) {
  if (h.num_edges() == 0) fail(ErrorCode::InvalidArgument, "hypergraph has no edges");
  CMatrix m = CMatrix::Zero(h.dims().dim(), h.dims().dim());
  for (size_t e = 0; e < h.num_edges(); ++e) {
    const CVector v = h.edge_vector(e);
    m.noalias() += v * v.adjoint();
  }
  return m;
}

DensityMatrix build_state(const GridHypergraph& h) {
  CMatrix m = unnormalized_state(h);
  Rational trace(0);
  for (const auto& edge : h.edges())
    for (const auto& a : edge.amplitudes) trace += a.squared();
  m /= trace.to_double();
  return {m, h.dims()};
}

std::vector<Vertex> isolated_vertices(const GridHypergraph& h) {
  std::vector<char> used(h.dims().dim(), 0);
  for (const auto& edge : h.edges())
    for (const auto& v : edge.vertices) used[h.flat(v)] = 1;
  std::vector<Vertex> out;
  for (int idx = 0; idx < h.dims().dim(); ++idx)
    if (!used[idx]) out.push_back(h.unflat(idx));
  return out;
}

FlatGraph flatten_to_graph(const GridHypergraph& h) {
  FlatGraph g;
  g.dims = h.dims();
  g.diagonal.assign(h.dims().dim(), Rational(0));
  for (const auto& edge : h.edges()) {
    for (size_t a = 0; a < edge.vertices.size(); ++a) {
      const int u = h.flat(edge.vertices[a]);
      g.diagonal[u] += edge.amplitudes[a].squared();
      for (size_t b = a + 1; b < edge.vertices.size(); ++b) {
        const int v = h.flat(edge.vertices[b]);
        const RadicalNumber w = RadicalNumber(edge.amplitudes[a]) * RadicalNumber(edge.amplitudes[b]);
        g.adjacency[{std::min(u, v), std::max(u, v)}] += w;
      }
    }
  }
  std::erase_if(g.adjacency, [](const auto& kv) { return kv.second.is_zero(); });
  return g;
}

FlatGraph flip_graph(const FlatGraph& g) {
  FlatGraph out;
  out.dims = g.dims;
  out.diagonal = g.diagonal;
  const int dB = g.dims.dB;
  for (const auto& [uv, w] : g.adjacency) {
    const int i1 = uv.first / dB, j1 = uv.first % dB;
    const int i2 = uv.second / dB, j2 = uv.second % dB;
    // Pairs sharing a row or a column map onto themselves.
    const int a = i1 * dB + j2, b = i2 * dB + j1;
    out.adjacency[{std::min(a, b), std::max(a, b)}] += w;
  }
  std::erase_if(out.adjacency, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string to_string(PptStatus s) {
  switch (s) {
    case PptStatus::PptGraphical:
      return "PPT_graphical";
    case PptStatus::PptNumeric:
      return "PPT_numeric";
    case PptStatus::Npt:
      return "NPT";
    case PptStatus::InconclusiveGraphical:
      return "inconclusive_graphical";
  }
  return "unknown";
}

namespace {

bool is_bipartite(const FlatGraph& g) {
  const int n = g.dims.dim();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [uv, w] : g.adjacency) {
    adj[uv.first].push_back(uv.second);
    adj[uv.second].push_back(uv.first);
  }
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

PptVerdict graphical_ppt_check(const GridHypergraph& h, double tol) {
  PptVerdict out;
  const FlatGraph flipped = flip_graph(flatten_to_graph(h));
  out.bipartite = is_bipartite(flipped);

  std::vector<RadicalNumber> degree(h.dims().dim());
  for (const auto& [uv, w] : flipped.adjacency) {
    degree[uv.first] += w.abs();
    degree[uv.second] += w.abs();
  }
  out.degree_condition = true;
  for (int v = 0; v < h.dims().dim(); ++v) {
    if ((RadicalNumber(flipped.diagonal[v]) - degree[v]).sign() < 0) {
      out.degree_condition = false;
      out.degree_violations.push_back(h.unflat(v));
    }
  }

  const DensityMatrix rho = build_state(h);
  out.min_eigenvalue_pt = min_eigenvalue(partial_transpose(rho.m, rho.dims, Side::B));
  out.numeric_ppt = out.min_eigenvalue_pt >= -tol;

  if (out.bipartite && out.degree_condition) {
    out.status = PptStatus::PptGraphical;
  } else if (out.bipartite) {
    // Under weights or repeated edges the degree test is only sufficient, so a
    // violation is confirmed numerically before reporting NPT.
    out.status = out.numeric_ppt ? PptStatus::PptNumeric : PptStatus::Npt;
  } else {
    out.status = PptStatus::InconclusiveGraphical;
  }

  std::ostringstream os;
  os << "flipped graph: " << flipped.adjacency.size() << " edges, "
     << (out.bipartite ? "2-colorable" : "not 2-colorable") << "; degree condition "
     << (out.degree_condition ? "holds" : "fails");
  if (!out.degree_violations.empty()) {
    os << " at";
    for (const auto& v : out.degree_violations) os << " (" << v.i << "," << v.j << ")";
  }
  os << "; min eigenvalue of partial transpose " << out.min_eigenvalue_pt;
  out.details = os.str();
  return out;
}

int sn_upper_from_decomposition(const GridHypergraph& h, double tol) {
  int best = 0;
  for (size_t e = 0; e < h.num_edges(); ++e) best = std::max(best, schmidt_rank(h.edge_vector(e), h.dims(), tol));
  return best;
}

GridHypergraph product_hypergraph(const GridHypergraph& h1, const GridHypergraph& h2,
                                  const std::vector<int>& new_row, const std::vector<int>& new_col,
                                  Bipartition out_dims, std::vector<std::pair<size_t, size_t>>* origin) {
  const int dA2 = h2.dims().dA, dB2 = h2.dims().dB;
  if (static_cast<int>(new_row.size()) != h1.dims().dA * dA2 ||
      static_cast<int>(new_col.size()) != h1.dims().dB * dB2)
    fail(ErrorCode::DimensionMismatch, "relabeling maps do not match the product dimensions");
  std::vector<WeightedEdge> edges;
  if (origin) origin->clear();
  for (size_t e1 = 0; e1 < h1.num_edges(); ++e1) {
    const auto& x = h1.edges()[e1];
    for (size_t e2 = 0; e2 < h2.num_edges(); ++e2) {
      const auto& y = h2.edges()[e2];
      WeightedEdge out;
      for (size_t a = 0; a < x.vertices.size(); ++a) {
        for (size_t b = 0; b < y.vertices.size(); ++b) {
          const int row = new_row[x.vertices[a].i * dA2 + y.vertices[b].i];
          const int col = new_col[x.vertices[a].j * dB2 + y.vertices[b].j];
          if (row < 0 || col < 0) continue;
          const Rational c = x.amplitudes[a].coef() * y.amplitudes[b].coef();
          out.vertices.push_back({row, col});
          out.amplitudes.emplace_back(c.num(), c.den(), x.amplitudes[a].radicand() * y.amplitudes[b].radicand());
        }
      }
      if (out.vertices.empty()) continue;
      if (!x.label.empty() && !y.label.empty()) out.label = x.label + "x" + y.label;
      edges.push_back(std::move(out));
      if (origin) origin->emplace_back(e1, e2);
    }
  }
  return GridHypergraph(out_dims, std::move(edges));
}

}  // namespace gridstate
