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

// Upper bound on max <xy|W|xy> from the symmetric-extension hierarchy with a
// PPT constraint, solved by consensus ADMM.
//
// The smaller side is extended n times. The variable lives on
// keep (x) Sym^n(ext), parametrized through an orthonormal basis of the
// symmetric subspace indexed by occupation numbers.

#pragma once

#include <string>
#include <vector>

#include "gridstate/linalg.hpp"

namespace gridstate {

struct SymmetricSpace {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> occupations;  // lexicographic, each sums to n
  CMatrix isometry;                           // d^n x dim, columns orthonormal
  CMatrix projector;                          // d^n x d^n
  int dim() const { return static_cast<int>(occupations.size()); }
};

/// Occupation vectors of length d summing to n, in lexicographic order.
std::vector<std::vector<int>> occupation_vectors(int d, int n);

/// Projector on Sym^n(C^d). For n <= 6 it is the average of the n!
/// permutation operators, beyond that V V^dag. Throws for n > 8 or d^n > 4096.
SymmetricSpace sym_projector(int d, int n);

/// Permutation operator on (C^d)^(x)n sending factor k to position perm[k].
CMatrix permutation_operator(int d, const std::vector<int>& perm);

long long binomial(int n, int k);

struct DpsProblem {
  CMatrix W;                // original witness
  Bipartition dims;
  int level = 1;
  Side extended_side = Side::B;
  int keep_dim = 0;
  int ext_dim = 0;
  int sym_dim = 0;
  std::vector<std::vector<int>> occupations;
  CMatrix W_hat;            // compressed objective, (keep_dim * sym_dim)^2
  bool extra_cuts = true;   // also PT across keep + j copies for j = 1..n-1
  int var_dim() const { return keep_dim * sym_dim; }
};

/// Throws InvalidArgument for levels above the default caps unless allow_large.
DpsProblem assemble(const CMatrix& W, const Bipartition& p, int level, bool extra_cuts = true,
                    bool allow_large = false);

/// Largest level run without opt-in for a given extension dimension.
int level_cap(int ext_dim);

struct SolverConfig {
  int max_iters = 200000;
  double eps_primal = 1e-7;
  double eps_dual = 1e-7;
  double over_relaxation = 1.5;
  double rho = 1.0;
  int adapt_every = 25;
  bool record_trace = false;
  int trace_every = 10;
};

struct TraceRow {
  int iteration;
  double objective;
  double primal_residual;
  double dual_residual;
};

struct DpsResult {
  double mu_U = 0.0;              // certified: lambda_max(W_hat + sum_j L_j^dag S_j), S_j >= 0
  double primal_objective = 0.0;  // tr(W_hat X) at the returned iterate
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double min_eigenvalue = 0.0;    // of the returned X
  double trace = 0.0;
  int iterations = 0;
  bool converged = false;
  CMatrix X;
  std::vector<TraceRow> trace_rows;
};

DpsResult solve(const DpsProblem& prob, const SolverConfig& cfg = {});

/// iteration,objective,primal_residual,dual_residual
std::string trace_csv(const std::vector<TraceRow>& rows);

}  // namespace gridstate
