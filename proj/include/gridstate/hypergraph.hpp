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

// Grid hypergraphs and the states they generate.
//
// A hyperedge e over the d_A x d_B vertex grid stands for the unnormalized
// vector |e> = sum_v a_v |v>, and the state of a hypergraph is the normalized
// equal mixture of |e><e| over the edge multiset.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridstate/exact.hpp"
#include "gridstate/linalg.hpp"

namespace gridstate {

struct Vertex {
  int i = 0;
  int j = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct WeightedEdge {
  std::vector<Vertex> vertices;
  std::vector<Amplitude> amplitudes;  // one per vertex
  std::string label;                  // optional, informational only

  static WeightedEdge uniform(std::vector<Vertex> vs, std::string label = {});
  bool is_loop() const { return vertices.size() == 1; }
  // Same vertex/amplitude content, ignoring order and label.
  bool same_vector(const WeightedEdge& o) const;
};

class GridHypergraph {
 public:
  GridHypergraph() = default;
  GridHypergraph(Bipartition dims, std::vector<WeightedEdge> edges);

  const Bipartition& dims() const { return dims_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  size_t num_edges() const { return edges_.size(); }
  int flat(const Vertex& v) const { return v.i * dims_.dB + v.j; }
  Vertex unflat(int idx) const { return {idx / dims_.dB, idx % dims_.dB}; }

  // Unnormalized edge vector |e>.
  CVector edge_vector(size_t e) const;
  // d_A*d_B x |E| matrix whose columns are the edge vectors.
  CMatrix edge_matrix() const;

  friend bool operator==(const GridHypergraph& a, const GridHypergraph& b);

 private:
  Bipartition dims_;
  std::vector<WeightedEdge> edges_;
};

/// Normalized equal mixture of the edge projectors.
DensityMatrix build_state(const GridHypergraph& h);
/// Unnormalized sum of |e><e| together with the normalization it lacks.
CMatrix unnormalized_state(const GridHypergraph& h);

std::vector<Vertex> isolated_vertices(const GridHypergraph& h);

/// Flattened graph G_H: exact off-diagonal weights and the exact diagonal D of
/// the unnormalized state. Keys are flat vertex indices (u < v).
struct FlatGraph {
  Bipartition dims;
  std::map<std::pair<int, int>, RadicalNumber> adjacency;
  std::vector<Rational> diagonal;
};

FlatGraph flatten_to_graph(const GridHypergraph& h);

/// The partially transposed graph: each adjacency {(i1,j1),(i2,j2)} is moved
/// to {(i1,j2),(i2,j1)}; weights landing on the same pair add up.
FlatGraph flip_graph(const FlatGraph& g);

enum class PptStatus { PptGraphical, PptNumeric, Npt, InconclusiveGraphical };

std::string to_string(PptStatus s);

struct PptVerdict {
  PptStatus status = PptStatus::InconclusiveGraphical;
  double min_eigenvalue_pt = 0.0;
  bool bipartite = false;
  bool degree_condition = false;
  bool numeric_ppt = false;
  std::vector<Vertex> degree_violations;
  std::string details;
};

PptVerdict graphical_ppt_check(const GridHypergraph& h, double tol = 1e-10);

/// Max Schmidt rank over the edge vectors, an upper bound on SN(rho_H).
int sn_upper_from_decomposition(const GridHypergraph& h, double tol = kDefaultRankTol);

/// Product hypergraph of h1 (on A1 x B1) and h2 (on A2 x B2) followed by a
/// vertex filter and relabeling: new_row[a1 * dA2 + a2] and
/// new_col[b1 * dB2 + b2] give the target index, or -1 when the local basis
/// state is filtered out. Edges left empty by the filter are dropped.
GridHypergraph product_hypergraph(const GridHypergraph& h1, const GridHypergraph& h2,
                                  const std::vector<int>& new_row, const std::vector<int>& new_col,
                                  Bipartition out_dims, std::vector<std::pair<size_t, size_t>>* origin = nullptr);

}  // namespace gridstate
