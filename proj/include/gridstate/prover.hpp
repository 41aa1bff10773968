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

// Schmidt-number lower bounds from the range of a grid state.
//
// Every range vector is Psi(c) = sum_e c_e |e>. A vector of Schmidt rank <= k
// has all (k+1)-minors of Psi(c) equal to zero. Whenever such a minor is a
// single monomial, one of its variables must vanish, which splits the search
// into branches. If every branch ends with the target variable erased, the
// target edge is orthogonal to the k-restricted range and SN > k.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gridstate/hypergraph.hpp"
#include "gridstate/poly.hpp"

namespace gridstate {

/// Psi: cell (i, j) = sum over edges containing (i, j) of amplitude * c_e.
/// Edges with identical vectors share one variable.
struct SymbolicRangeMatrix {
  Bipartition dims;
  PolyMatrix cells;
  std::vector<std::string> var_names;
  std::vector<int> edge_var;  // edge index -> variable id

  std::string name(int var) const { return var_names.at(var); }
  std::string describe(const Poly& p) const;
  PolyMatrix erased(const std::set<int>& vars) const;
};

SymbolicRangeMatrix symbolic_range(const GridHypergraph& h);

struct MinorEntry {
  std::vector<int> rows;
  std::vector<int> cols;
  Poly value;
};

/// All nonzero size x size minors, optionally after erasing variables.
std::vector<MinorEntry> minors(const SymbolicRangeMatrix& m, int size, const std::set<int>& erased = {});

enum class NodeStatus { Branch, TargetErased, Stuck };
std::string to_string(NodeStatus s);

struct ProofNode {
  int id = 0;
  std::vector<int> erased;  // sorted variable ids
  NodeStatus status = NodeStatus::Stuck;
  // Branch nodes: the monomial minor used and one child per distinct variable.
  std::vector<int> rows, cols;
  Monomial monomial;
  std::string monomial_text;
  std::vector<int> branch_vars;
  std::vector<int> children;
  // Stuck nodes: a sample of the nonzero minors left over.
  std::vector<std::string> residual;
};

struct ProofTree {
  int k = 0;
  int target_edge = 0;
  int target_var = 0;
  std::vector<std::string> var_names;
  std::vector<ProofNode> nodes;  // nodes[0] is the root
  std::vector<std::string> root_monomials;
  bool certified = false;
  bool budget_exhausted = false;
};

struct ProverOptions {
  size_t node_budget = 200000;
  size_t residual_sample = 16;
  // Monomials to branch on first when they occur, e.g. "c11*c21*c12" or
  // "c11^2*c22". Earlier entries win. Unknown names are ignored.
  std::vector<std::string> preferred;
};

/// Throws InvalidArgument for a bad target (out of range or linearly
/// dependent on the other edges). A stuck result is not a disproof.
ProofTree prove_sn_exceeds(const GridHypergraph& h, int k, int target, const ProverOptions& opts = {});

struct ReplayReport {
  bool ok = false;
  size_t nodes_checked = 0;
  std::string message;
};

/// Re-derives every branching minor with an independent permutation-sum
/// determinant and checks the tree structure.
ReplayReport replay_proof(const GridHypergraph& h, const ProofTree& tree);

/// Randomized alternating projection between the range and the set of
/// Schmidt-rank-<=k matrices, looking for a vector with a nonzero target
/// coefficient. Any vector returned contradicts a certificate.
std::optional<CVector> falsify_by_sampling(const GridHypergraph& h, int k, int target, int attempts,
                                           std::uint64_t seed);

}  // namespace gridstate
