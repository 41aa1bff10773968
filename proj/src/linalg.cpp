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

#include "gridstate/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

Eigen::Index checked_product(Eigen::Index a, Eigen::Index b) {
  if (a != 0 && b > std::numeric_limits<int>::max() / a)
    fail(ErrorCode::Overflow, "tensor product dimension overflow");
  return a * b;
}

void require_square(const CMatrix& m, const Bipartition& p) {
  if (m.rows() != m.cols() || m.rows() != p.dim())
    fail(ErrorCode::DimensionMismatch, "matrix of size " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + " does not match bipartition " +
                                           std::to_string(p.dA) + "x" + std::to_string(p.dB));
}

}  // namespace

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index rows = checked_product(a.rows(), b.rows());
  const Eigen::Index cols = checked_product(a.cols(), b.cols());
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(checked_product(a.size(), b.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const Bipartition& p, Side side) {
  require_square(m, p);
  CMatrix out(m.rows(), m.cols());
  const int dA = p.dA, dB = p.dB;
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dB; ++j)
      for (int k = 0; k < dA; ++k)
        for (int l = 0; l < dB; ++l) {
          if (side == Side::B)
            out(i * dB + j, k * dB + l) = m(i * dB + l, k * dB + j);
          else
            out(i * dB + j, k * dB + l) = m(k * dB + j, i * dB + l);
        }
  return out;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

EigenSystem herm_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "herm_eig needs a square matrix");
  if (m.size() == 0) return {};
  if (!is_hermitian(m, 1e-10)) fail(ErrorCode::InvalidArgument, "herm_eig: matrix is not Hermitian");
  // Symmetrize so roundoff in the input cannot leak into the solver.
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) fail(ErrorCode::Internal, "eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

RVector herm_eigenvalues(const CMatrix& m) {
  if (m.size() == 0) return {};
  if (!is_hermitian(m, 1e-10)) fail(ErrorCode::InvalidArgument, "herm_eig: matrix is not Hermitian");
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorCode::Internal, "eigensolver did not converge");
  return es.eigenvalues();
}

double min_eigenvalue(const CMatrix& m) { return herm_eigenvalues(m)(0); }

double max_eigenvalue(const CMatrix& m) {
  const RVector ev = herm_eigenvalues(m);
  return ev(ev.size() - 1);
}

int numeric_rank(const CMatrix& m, double tol) {
  if (tol <= 0) fail(ErrorCode::InvalidArgument, "rank tolerance must be positive");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

CMatrix coefficient_matrix(const CVector& v, const Bipartition& p) {
  if (v.size() != p.dim()) fail(ErrorCode::DimensionMismatch, "vector length does not match bipartition");
  CMatrix c(p.dA, p.dB);
  for (int i = 0; i < p.dA; ++i)
    for (int j = 0; j < p.dB; ++j) c(i, j) = v(i * p.dB + j);
  return c;
}

int schmidt_rank(const CVector& v, const Bipartition& p, double tol) {
  if (v.norm() == 0.0) fail(ErrorCode::InvalidArgument, "schmidt_rank of the zero vector");
  return numeric_rank(coefficient_matrix(v, p), tol);
}

CMatrix range_basis(const CMatrix& herm, double tol) {
  const EigenSystem es = herm_eig(herm);
  const double scale = es.values.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    if (std::abs(es.values(i)) > tol * scale) keep.push_back(i);
  CMatrix basis(herm.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = es.vectors.col(keep[c]);
  return basis;
}

CMatrix project_psd(const CMatrix& herm) {
  const EigenSystem es = herm_eig(herm);
  const RVector clipped = es.values.cwiseMax(0.0);
  return es.vectors * clipped.asDiagonal() * es.vectors.adjoint();
}

CMatrix range_projector(const CMatrix& herm, double tol) {
  const CMatrix v = range_basis(herm, tol);
  return v * v.adjoint();
}

}  // namespace gridstate
