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

// PPT-extremality and the witness W = P + Q^T_B.
//
// With P the range projector of rho and Q that of rho^T_B, the maps
// P(s) = P s P and Q(s) = (Q s^T_B Q)^T_B are orthogonal projections on the
// real space of Hermitian matrices. rho is extremal in the PPT set exactly when
// the eigenvalue 2 of P + Q is nondegenerate.

#pragma once

#include "gridstate/linalg.hpp"

namespace gridstate {

inline constexpr double kDefaultRangeTol = 1e-8;

struct RangePair {
  CMatrix P;
  CMatrix Q;
  Bipartition dims;
  int rank_P = 0;
  int rank_Q = 0;
  double tol = kDefaultRangeTol;
};

RangePair range_pair(const DensityMatrix& rho, double tol = kDefaultRangeTol);

enum class ExtremalMethod { Auto, Dense, Kernel };

struct ExtremalityVerdict {
  int multiplicity_of_2 = 0;
  double second_eigenvalue_gap = 0.0;  // 2 - largest eigenvalue below the cluster at 2
  double max_eigenvalue = 0.0;
  double alignment = 0.0;              // |<s, rho>| / (|s| |rho|) for the top eigenvector
  bool is_extremal = false;
  bool dense = false;                  // which route produced the verdict
};

/// Throws NotPpt for inputs whose partial transpose has an eigenvalue below
/// -ppt_tol. Auto uses the dense d^2 x d^2 matrix up to d = 40.
ExtremalityVerdict extremality_test(const DensityMatrix& rho, double tol = kDefaultRangeTol,
                                    ExtremalMethod method = ExtremalMethod::Auto, double ppt_tol = 1e-10);

/// Coordinates of a Hermitian matrix in the orthonormal generalized Gell-Mann
/// basis and back.
RVector hermitian_to_ggm(const CMatrix& h);
CMatrix ggm_to_hermitian(const RVector& x, int d);

CMatrix build_witness(const RangePair& rp);
/// mu 1 - W; throws InvalidArgument unless 0 < mu < 2.
CMatrix indecomposable_witness(const RangePair& rp, double mu);

}  // namespace gridstate
