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

#include "gridstate/prover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "gridstate/error.hpp"

namespace gridstate {

std::string SymbolicRangeMatrix::describe(const Poly& p) const {
  return p.to_string([this](int v) { return name(v); });
}

PolyMatrix SymbolicRangeMatrix::erased(const std::set<int>& vars) const {
  if (vars.empty()) return cells;
  PolyMatrix out = cells;
  for (auto& row : out)
    for (auto& cell : row) cell = cell.erase(vars);
  return out;
}

SymbolicRangeMatrix symbolic_range(const GridHypergraph& h) {
  SymbolicRangeMatrix m;
  m.dims = h.dims();
  m.cells.assign(h.dims().dA, std::vector<Poly>(h.dims().dB));
  std::vector<size_t> representative;
  for (size_t e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edges()[e];
    int var = -1;
    for (size_t r = 0; r < representative.size(); ++r)
      if (h.edges()[representative[r]].same_vector(edge)) var = static_cast<int>(r);
    if (var < 0) {
      var = static_cast<int>(representative.size());
      representative.push_back(e);
      m.var_names.push_back(edge.label.empty() ? "c" + std::to_string(e) : edge.label);
      for (size_t k = 0; k < edge.vertices.size(); ++k)
        m.cells[edge.vertices[k].i][edge.vertices[k].j] += Poly::variable(var, RadicalNumber(edge.amplitudes[k]));
    }
    m.edge_var.push_back(var);
  }
  return m;
}

std::vector<MinorEntry> minors(const SymbolicRangeMatrix& m, int size, const std::set<int>& erased) {
  if (size > std::min(m.dims.dA, m.dims.dB))
    fail(ErrorCode::InvalidArgument, "minor size exceeds the matrix dimensions");
  const PolyMatrix cells = m.erased(erased);
  std::vector<MinorEntry> out;
  for_each_submatrix(m.dims.dA, m.dims.dB, size, [&](const std::vector<int>& r, const std::vector<int>& c) {
    Poly d = determinant(cells, r, c);
    if (!d.is_zero()) out.push_back({r, c, std::move(d)});
  });
  return out;
}

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Branch:
      return "branch";
    case NodeStatus::TargetErased:
      return "target_erased";
    case NodeStatus::Stuck:
      return "stuck";
  }
  return "unknown";
}

namespace {

std::vector<int> distinct(const Monomial& m) {
  std::vector<int> out(m.begin(), m.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Ordering key for branching: monomials containing the target first (one
// branch closes at once), then fewest distinct variables, lowest degree,
// lexicographic monomial, position.
// Caller hints, when given, come before all of that.
using BranchKey = std::tuple<size_t, bool, size_t, size_t, Monomial, std::vector<int>, std::vector<int>>;

// "c11^2*c22" -> sorted variable ids; empty when a name is unknown.
Monomial parse_hint(const SymbolicRangeMatrix& psi, const std::string& text) {
  Monomial out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(pos, end - pos);
    int power = 1;
    if (const size_t caret = factor.find('^'); caret != std::string::npos) {
      power = std::stoi(factor.substr(caret + 1));
      factor = factor.substr(0, caret);
    }
    const auto it = std::find(psi.var_names.begin(), psi.var_names.end(), factor);
    if (it == psi.var_names.end()) return {};
    for (int i = 0; i < power; ++i) out.push_back(static_cast<int>(it - psi.var_names.begin()));
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Prover {
 public:
  Prover(const SymbolicRangeMatrix& psi, int k, int target, const ProverOptions& opts, ProofTree& tree)
      : psi_(psi), k_(k), target_(target), opts_(opts), tree_(tree) {
    for (const auto& h : opts.preferred) hints_.push_back(parse_hint(psi, h));
  }

  int explore(const std::set<int>& erased) {
    const std::vector<int> key(erased.begin(), erased.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int id = static_cast<int>(tree_.nodes.size());
    memo_.emplace(key, id);
    tree_.nodes.push_back({});
    tree_.nodes[id].id = id;
    tree_.nodes[id].erased = key;

    if (erased.count(target_)) {
      tree_.nodes[id].status = NodeStatus::TargetErased;
      return id;
    }
    if (tree_.nodes.size() > opts_.node_budget) {
      tree_.budget_exhausted = true;
      mark_stuck(id, {"node budget exhausted"});
      return id;
    }

    const std::vector<MinorEntry> all = minors(psi_, k_ + 1, erased);
    const MinorEntry* best = nullptr;
    BranchKey best_key;
    for (const auto& m : all) {
      if (!m.value.is_monomial()) continue;
      const Monomial& mono = m.value.terms().begin()->first;
      if (id == 0) tree_.root_monomials.push_back(psi_.describe(m.value));
      const bool no_target = std::find(mono.begin(), mono.end(), target_) == mono.end();
      const size_t hint = std::find(hints_.begin(), hints_.end(), mono) - hints_.begin();
      BranchKey bk{hint, no_target, distinct(mono).size(), mono.size(), mono, m.rows, m.cols};
      if (!best || bk < best_key) {
        best = &m;
        best_key = std::move(bk);
      }
    }
    if (!best) {
      std::vector<std::string> residual;
      for (const auto& m : all) {
        if (residual.size() >= opts_.residual_sample) break;
        residual.push_back(psi_.describe(m.value));
      }
      if (residual.empty()) residual.push_back("all minors vanish identically");
      mark_stuck(id, std::move(residual));
      return id;
    }

    {
      ProofNode& node = tree_.nodes[id];
      node.status = NodeStatus::Branch;
      node.rows = best->rows;
      node.cols = best->cols;
      node.monomial = best->value.terms().begin()->first;
      node.monomial_text = psi_.describe(best->value);
      node.branch_vars = distinct(node.monomial);
    }
    const std::vector<int> vars = tree_.nodes[id].branch_vars;
    for (int v : vars) {
      if (stuck_) break;
      std::set<int> next = erased;
      next.insert(v);
      const int child = explore(next);
      tree_.nodes[id].children.push_back(child);
    }
    return id;
  }

  bool stuck() const { return stuck_; }

 private:
  void mark_stuck(int id, std::vector<std::string> residual) {
    tree_.nodes[id].status = NodeStatus::Stuck;
    tree_.nodes[id].residual = std::move(residual);
    stuck_ = true;
  }

  const SymbolicRangeMatrix& psi_;
  int k_;
  int target_;
  const ProverOptions& opts_;
  std::vector<Monomial> hints_;
  ProofTree& tree_;
  std::map<std::vector<int>, int> memo_;
  bool stuck_ = false;
};

// Distinct edge vectors as columns, one per prover variable.
CMatrix variable_matrix(const GridHypergraph& h, const SymbolicRangeMatrix& psi) {
  CMatrix e(h.dims().dim(), static_cast<Eigen::Index>(psi.var_names.size()));
  std::vector<char> done(psi.var_names.size(), 0);
  for (size_t idx = 0; idx < h.num_edges(); ++idx) {
    const int v = psi.edge_var[idx];
    if (done[v]) continue;
    done[v] = 1;
    e.col(v) = h.edge_vector(idx);
  }
  return e;
}

void check_target(const GridHypergraph& h, const SymbolicRangeMatrix& psi, int k, int target) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (target < 0 || target >= static_cast<int>(h.num_edges()))
    fail(ErrorCode::InvalidArgument, "target edge " + std::to_string(target) + " out of range");
  if (k + 1 > std::min(h.dims().dA, h.dims().dB))
    fail(ErrorCode::InvalidArgument, "k + 1 exceeds the smaller local dimension");
  const CMatrix e = variable_matrix(h, psi);
  const int tv = psi.edge_var[target];
  CMatrix rest(e.rows(), e.cols() - 1);
  for (Eigen::Index c = 0, out = 0; c < e.cols(); ++c)
    if (c != tv) rest.col(out++) = e.col(c);
  if (numeric_rank(e) != numeric_rank(rest) + 1)
    fail(ErrorCode::InvalidArgument, "target edge is linearly dependent on the other edges");
}

// Permutation-sum determinant, deliberately a different code path from the
// cofactor expansion used by the prover.
Poly leibniz_determinant(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    int inversions = 0;
    for (size_t a = 0; a < perm.size(); ++a)
      for (size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    Poly term = Poly::constant(RadicalNumber(inversions % 2 ? -1 : 1));
    for (size_t r = 0; r < perm.size() && !term.is_zero(); ++r) term = term * m[rows[r]][cols[perm[r]]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

ProofTree prove_sn_exceeds(const GridHypergraph& h, int k, int target, const ProverOptions& opts) {
  const SymbolicRangeMatrix psi = symbolic_range(h);
  check_target(h, psi, k, target);
  ProofTree tree;
  tree.k = k;
  tree.target_edge = target;
  tree.target_var = psi.edge_var[target];
  tree.var_names = psi.var_names;
  Prover prover(psi, k, tree.target_var, opts, tree);
  prover.explore({});
  tree.certified = !prover.stuck() && std::none_of(tree.nodes.begin(), tree.nodes.end(), [](const ProofNode& n) {
    return n.status == NodeStatus::Stuck;
  });
  return tree;
}

ReplayReport replay_proof(const GridHypergraph& h, const ProofTree& tree) {
  ReplayReport rep;
  const SymbolicRangeMatrix psi = symbolic_range(h);
  auto bad = [&](const std::string& why) {
    rep.ok = false;
    rep.message = why;
    return rep;
  };
  if (tree.nodes.empty()) return bad("empty proof tree");
  if (tree.target_edge < 0 || tree.target_edge >= static_cast<int>(h.num_edges()))
    return bad("target edge out of range");
  if (psi.edge_var[tree.target_edge] != tree.target_var) return bad("target variable mismatch");
  if (!tree.nodes[0].erased.empty()) return bad("root must start with nothing erased");

  const int n = tree.k + 1;
  for (const ProofNode& node : tree.nodes) {
    ++rep.nodes_checked;
    const std::set<int> erased(node.erased.begin(), node.erased.end());
    const std::string where = "node " + std::to_string(node.id) + ": ";
    switch (node.status) {
      case NodeStatus::Stuck:
        return bad(where + "stuck leaf, not a certificate");
      case NodeStatus::TargetErased:
        if (!erased.count(tree.target_var)) return bad(where + "leaf claims the target is erased but it is not");
        break;
      case NodeStatus::Branch: {
        if (static_cast<int>(node.rows.size()) != n || static_cast<int>(node.cols.size()) != n)
          return bad(where + "minor has the wrong size");
        const Poly d = leibniz_determinant(psi.erased(erased), node.rows, node.cols);
        if (!d.is_monomial()) return bad(where + "recorded minor is not a monomial");
        if (d.terms().begin()->first != node.monomial) return bad(where + "recorded monomial does not match");
        const std::vector<int> vars = distinct(node.monomial);
        if (vars != node.branch_vars || node.children.size() != vars.size())
          return bad(where + "branch does not cover every variable of the monomial");
        for (size_t c = 0; c < vars.size(); ++c) {
          const int child = node.children[c];
          if (child < 0 || child >= static_cast<int>(tree.nodes.size())) return bad(where + "dangling child");
          std::set<int> expect = erased;
          expect.insert(vars[c]);
          const auto& got = tree.nodes[child].erased;
          if (std::set<int>(got.begin(), got.end()) != expect) return bad(where + "child erased set is wrong");
        }
        break;
      }
    }
  }
  rep.ok = true;
  rep.message = "replayed " + std::to_string(rep.nodes_checked) + " nodes";
  return rep;
}

std::optional<CVector> falsify_by_sampling(const GridHypergraph& h, int k, int target, int attempts,
                                           std::uint64_t seed) {
  if (attempts <= 0) fail(ErrorCode::InvalidArgument, "attempts must be positive");
  const SymbolicRangeMatrix psi = symbolic_range(h);
  if (target < 0 || target >= static_cast<int>(h.num_edges()))
    fail(ErrorCode::InvalidArgument, "target edge out of range");
  const int tv = psi.edge_var[target];
  const CMatrix e = variable_matrix(h, psi);
  const Eigen::CompleteOrthogonalDecomposition<CMatrix> solver(e);
  const Bipartition p = h.dims();

  auto accept = [&](const CVector& c) -> std::optional<CVector> {
    const CVector v = e * c;
    if (v.norm() < 1e-12) return std::nullopt;
    if (std::abs(c(tv)) < 1e-3 * c.norm()) return std::nullopt;
    if (schmidt_rank(v, p, 1e-8) > k) return std::nullopt;
    return v;
  };

  // The target edge itself is the first candidate.
  CVector c0 = CVector::Zero(e.cols());
  c0(tv) = 1.0;
  if (auto hit = accept(c0)) return hit;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int a = 1; a < attempts; ++a) {
    CVector c(e.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = cplx(gauss(rng), gauss(rng));
    for (int it = 0; it < 300; ++it) {
      const CMatrix coeff = coefficient_matrix(e * c, p);
      Eigen::JacobiSVD<CMatrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
      RVector s = svd.singularValues();
      for (Eigen::Index i = k; i < s.size(); ++i) s(i) = 0.0;
      const CMatrix trunc = svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
      CVector flat(p.dim());
      for (int i = 0; i < p.dA; ++i)
        for (int j = 0; j < p.dB; ++j) flat(i * p.dB + j) = trunc(i, j);
      CVector next = solver.solve(flat);
      const double nn = next.norm();
      if (nn < 1e-12) break;
      next /= nn;
      const double residual = (e * next - flat / nn).norm();
      c = next;
      if (residual < 1e-11) break;
    }
    if (auto hit = accept(c)) return hit;
  }
  return std::nullopt;
}

}  // namespace gridstate
