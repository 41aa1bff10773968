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

// Schmidt-number concentration.
//
// Theta tensors a state rho (on A1 B1) with the crosshatch state (on A2 B2),
// applies the local filters
//   A = |alpha><alpha| (x) (|0><0| + |2><2|) + 1 (x) |1><1|
//   B = 1 (x) (|0><0| + |1><1|) + |beta><beta| (x) |2><2|
// and trims Bob's B2 = 1 block down to its support. The A2 B2 = |10> corner of
// the output is the input again (nesting).

#pragma once

#include <string>
#include <vector>

#include "gridstate/hypergraph.hpp"
#include "gridstate/prover.hpp"

namespace gridstate {

/// Crosshatch edges in the fixed order e1..e4:
/// {(1,0),(0,2)}, {(2,0),(1,2)}, {(0,0),(2,1)}, {(0,1),(2,2)}.
GridHypergraph crosshatch();
/// 5 x 5 Schmidt-number-three state; the 3-edge is edge 12.
GridHypergraph rho_5_5();
/// 2 x 4 Horodecki state with one weighted edge sqrt(2)|13> + |10>.
GridHypergraph horodecki_hypergraph();
DensityMatrix horodecki();
/// Pi_A (rho_Hor (x) rho_CH) Pi_A with Alice {00,01,11,02} -> {0,1,2,3} and
/// Bob (b1, b2) -> b1 + 4 b2.
GridHypergraph rho_4_12_hypergraph();
DensityMatrix build_4x12();

struct ThetaContext {
  DensityMatrix rho;  // trace one
  CMatrix sigma;      // rho = sigma + |v><v|
  CVector v;
  CVector alpha;
  CVector beta;
  cplx t;  // <alpha beta|v>
  int k = 0;
};

/// Throws ContextViolation when an invariant fails by more than tol.
void validate_context(const ThetaContext& ctx, double tol = 1e-10);

/// Seed context for the family: crosshatch, v = e1, |alpha beta> = |10>.
ThetaContext crosshatch_context();

struct ThetaResult {
  DensityMatrix state;
  ThetaContext next;
  Bipartition dims;
  int r_B = 0;
  double normalization = 0.0;  // trace of the filtered output before rescaling
  double nesting_scale = 0.0;
  double nesting_residual = 0.0;
  double min_pt_eigenvalue = 0.0;
  int next_v_schmidt_rank = 0;
  bool basis_aligned = false;
  std::vector<int> row_of_a1;  // output row of |a1>|1>
  std::vector<int> col_of_b1;  // output column of |b1>|0>
};

ThetaResult apply_theta(const ThetaContext& ctx, double tol = 1e-10);

/// Grid rendering of Theta for basis-vector alpha = |a>, beta = |b>.
/// origin, when given, receives (edge of h, crosshatch edge) per output edge.
GridHypergraph theta_hypergraph(const GridHypergraph& h, int a, int b,
                                std::vector<std::pair<size_t, size_t>>* origin = nullptr);

struct FamilyMember {
  int n = 1;
  GridHypergraph graph;
  DensityMatrix state;
  int target_edge = 0;  // Schmidt-rank n+1 edge carried along the chain
  int sn_label = 2;
  int r_B = 0;
  double nesting_residual = 0.0;  // zero for the seed
  double min_pt_eigenvalue = 0.0;
  double render_residual = 0.0;   // max |build_state(graph) - Theta output|
  double normalization = 1.0;
};

struct Family {
  std::vector<FamilyMember> members;  // members[m - 1] is rho^(m)
  std::vector<ThetaContext> contexts;
};

Family build_family(int n);

/// Evidence for family members whose Schmidt number the monomial prover did
/// not settle: nesting chain, PPT, decomposition upper bound, bookkeeping.
struct StructuralEvidence {
  int n = 0;
  bool nesting_ok = false;
  bool ppt_ok = false;
  bool dims_ok = false;
  bool recursion_ok = false;
  int sn_upper = 0;
  int sn_label = 0;
  std::string label;
  std::vector<std::string> lines;
};

StructuralEvidence structural_evidence(const Family& f, int n);

// Horodecki range analysis: no product |xy> in R(rho) with |x* y> in
// R(rho^T_B), by exact case analysis over x = (0, 1) and x = (1, a).
struct HorodeckiAnalysis {
  bool kernels_verified = false;
  bool case_x01 = false;
  bool case_x1a_unit_modulus = false;
  bool case_x1a_contradiction = false;
  bool entangled = false;
  std::vector<std::string> lines;
};

HorodeckiAnalysis analyze_horodecki();

struct Sn3Certificate {
  bool structure = false;
  bool kernel_block = false;
  bool cascade = false;
  bool nesting = false;
  bool horodecki_entangled = false;
  int sn_upper = 0;
  double nesting_residual = 0.0;
  bool pass = false;
  std::vector<std::string> lines;
};

Sn3Certificate certify_sn3_4x12(const DensityMatrix& rho);

}  // namespace gridstate
