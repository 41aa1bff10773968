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

// Dense complex linear algebra shared by every module. All index
// conventions are row-major: index(i, j) = i * d_B + j.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gridstate {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct Bipartition {
  int dA = 1;
  int dB = 1;
  int dim() const { return dA * dB; }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

enum class Side { A, B };

/// Hermitian operator with its bipartition attached.
struct DensityMatrix {
  CMatrix m;
  Bipartition dims;
};

inline constexpr double kDefaultRankTol = 1e-9;

CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

CMatrix partial_transpose(const CMatrix& m, const Bipartition& p, Side side = Side::B);

struct EigenSystem {
  RVector values;   // ascending
  CMatrix vectors;  // columns
};

/// Throws InvalidArgument when m is not Hermitian within 1e-10 * max(1, |m|).
EigenSystem herm_eig(const CMatrix& m);
RVector herm_eigenvalues(const CMatrix& m);
double min_eigenvalue(const CMatrix& m);
double max_eigenvalue(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tol);

/// Number of singular values above tol * sigma_max.
int numeric_rank(const CMatrix& m, double tol = kDefaultRankTol);

/// Rank of the dA x dB reshaping of v.
int schmidt_rank(const CVector& v, const Bipartition& p, double tol = kDefaultRankTol);

/// Reshape a length dA*dB vector into its dA x dB coefficient matrix.
CMatrix coefficient_matrix(const CVector& v, const Bipartition& p);

/// Orthonormal basis of the range (eigenvalues above tol * max |lambda|).
CMatrix range_basis(const CMatrix& herm, double tol);

/// Projection of a Hermitian matrix onto the PSD cone (eigenvalue clipping).
CMatrix project_psd(const CMatrix& herm);

/// Orthogonal projector onto the range of a PSD matrix.
CMatrix range_projector(const CMatrix& herm, double tol);

}  // namespace gridstate
