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

#include "gridstate/extremal.hpp"

#include <cmath>
#include <vector>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

constexpr double kEigTol = 1e-7;  // |lambda - 2| below this counts as 2

struct SparseEntry {
  int r, c;
  cplx v;
};

// Generalized Gell-Mann element b of dimension d as a short entry list.
// Order: symmetric (j<k), antisymmetric (j<k), diagonal l = 1..d-1, identity.
std::vector<SparseEntry> ggm_element(int b, int d) {
  const int pairs = d * (d - 1) / 2;
  const double s = 1.0 / std::sqrt(2.0);
  if (b < 2 * pairs) {
    int idx = b % pairs, j = 0;
    while (idx >= d - 1 - j) {
      idx -= d - 1 - j;
      ++j;
    }
    const int k = j + 1 + idx;
    if (b < pairs) return {{j, k, s}, {k, j, s}};
    return {{j, k, cplx(0, -s)}, {k, j, cplx(0, s)}};
  }
  const int l = b - 2 * pairs + 1;
  std::vector<SparseEntry> out;
  if (l < d) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) out.push_back({m, m, norm});
    out.push_back({l, l, -l * norm});
  } else {
    for (int m = 0; m < d; ++m) out.push_back({m, m, 1.0 / std::sqrt(static_cast<double>(d))});
  }
  return out;
}

// (Q s^T_B Q)^T_B for a sparse s, using column/row outer products.
CMatrix apply_Q_sparse(const CMatrix& Q, const Bipartition& p, const std::vector<SparseEntry>& s) {
  CMatrix acc = CMatrix::Zero(Q.rows(), Q.cols());
  for (const auto& e : s) {
    const int i = e.r / p.dB, j = e.r % p.dB, k = e.c / p.dB, l = e.c % p.dB;
    // s^T_B moves (i j, k l) to (i l, k j).
    acc += e.v * Q.col(i * p.dB + l) * Q.row(k * p.dB + j);
  }
  return partial_transpose(acc, p, Side::B);
}

CMatrix apply_P_sparse(const CMatrix& P, const std::vector<SparseEntry>& s) {
  CMatrix acc = CMatrix::Zero(P.rows(), P.cols());
  for (const auto& e : s) acc += e.v * P.col(e.r) * P.row(e.c);
  return acc;
}

double alignment(const CMatrix& s, const CMatrix& rho) {
  const double num = std::abs((s.adjoint() * rho).trace());
  return num / (s.norm() * rho.norm());
}

}  // namespace

RVector hermitian_to_ggm(const CMatrix& h) {
  const int d = static_cast<int>(h.rows());
  RVector x(d * d);
  int b = 0;
  const double r2 = std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) x(b++) = r2 * h(j, k).real();
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) x(b++) = -r2 * h(j, k).imag();
  double prefix = 0.0;
  for (int l = 1; l < d; ++l) {
    prefix += h(l - 1, l - 1).real();
    x(b++) = (prefix - l * h(l, l).real()) / std::sqrt(static_cast<double>(l) * (l + 1));
  }
  x(b) = h.trace().real() / std::sqrt(static_cast<double>(d));
  return x;
}

CMatrix ggm_to_hermitian(const RVector& x, int d) {
  CMatrix h = CMatrix::Zero(d, d);
  for (int b = 0; b < d * d; ++b)
    for (const auto& e : ggm_element(b, d)) h(e.r, e.c) += x(b) * e.v;
  return h;
}

RangePair range_pair(const DensityMatrix& rho, double tol) {
  RangePair rp;
  rp.dims = rho.dims;
  rp.tol = tol;
  const CMatrix vp = range_basis(rho.m, tol);
  const CMatrix vq = range_basis(partial_transpose(rho.m, rho.dims, Side::B), tol);
  rp.P = vp * vp.adjoint();
  rp.Q = vq * vq.adjoint();
  rp.rank_P = static_cast<int>(vp.cols());
  rp.rank_Q = static_cast<int>(vq.cols());
  return rp;
}

ExtremalityVerdict extremality_test(const DensityMatrix& rho, double tol, ExtremalMethod method, double ppt_tol) {
  const Bipartition p = rho.dims;
  const int d = p.dim();
  if (rho.m.rows() != d) fail(ErrorCode::DimensionMismatch, "state does not match its bipartition");
  const double min_pt = min_eigenvalue(partial_transpose(rho.m, p, Side::B));
  if (min_pt < -ppt_tol) fail(ErrorCode::NotPpt, "extremality test needs a PPT state (min PT eigenvalue " +
                                                      std::to_string(min_pt) + ")");
  const RangePair rp = range_pair(rho, tol);
  ExtremalityVerdict v;
  v.dense = method == ExtremalMethod::Dense || (method == ExtremalMethod::Auto && d <= 40);

  if (v.dense) {
    const int n = d * d;
    RMatrix G(n, n);
    for (int b = 0; b < n; ++b) {
      const auto s = ggm_element(b, d);
      const CMatrix img = apply_P_sparse(rp.P, s) + apply_Q_sparse(rp.Q, p, s);
      G.col(b) = hermitian_to_ggm(img);
    }
    G = (0.5 * (G + G.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(G);
    const RVector& ev = es.eigenvalues();
    v.max_eigenvalue = ev(n - 1);
    double below = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      if (std::abs(ev(i) - 2.0) < kEigTol) {
        ++v.multiplicity_of_2;
      } else {
        below = ev(i);
        break;
      }
    }
    v.second_eigenvalue_gap = 2.0 - below;
    v.alignment = alignment(ggm_to_hermitian(es.eigenvectors().col(n - 1), d), rho.m);
  } else {
    // Eigenvalue 2 lives in range(P) cap range(Q). Parametrize range(P) by
    // s = V X V^dag and look at |(1 - Q) s|^2 = sin^2 of the principal angles.
    const CMatrix V = range_basis(rho.m, tol);
    const int r = static_cast<int>(V.cols());
    const int m = r * r;
    RMatrix L(d * d, m);
    for (int b = 0; b < m; ++b) {
      const auto e = ggm_element(b, r);
      CMatrix x = CMatrix::Zero(r, r);
      for (const auto& t : e) x(t.r, t.c) += t.v;
      const CMatrix s = V * x * V.adjoint();
      const CMatrix qs = partial_transpose(rp.Q * partial_transpose(s, p) * rp.Q, p);
      L.col(b) = hermitian_to_ggm(s - qs);
    }
    RMatrix gram = L.transpose() * L;
    gram = (0.5 * (gram + gram.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(gram);
    const RVector& sv = es.eigenvalues();
    auto lambda = [](double s) { return 1.0 + std::sqrt(std::max(0.0, 1.0 - s)); };
    v.max_eigenvalue = lambda(sv(0));
    double below = 1.0;
    for (int i = 0; i < m; ++i) {
      if (2.0 - lambda(sv(i)) < kEigTol) {
        ++v.multiplicity_of_2;
      } else {
        below = std::max(lambda(sv(i)), 1.0);
        break;
      }
    }
    v.second_eigenvalue_gap = 2.0 - below;
    const RVector x0 = es.eigenvectors().col(0);
    v.alignment = alignment(V * ggm_to_hermitian(x0, r) * V.adjoint(), rho.m);
  }
  v.is_extremal = v.multiplicity_of_2 == 1;
  return v;
}

CMatrix build_witness(const RangePair& rp) { return rp.P + partial_transpose(rp.Q, rp.dims, Side::B); }

CMatrix indecomposable_witness(const RangePair& rp, double mu) {
  if (!(mu > 0.0 && mu < 2.0)) fail(ErrorCode::InvalidArgument, "mu must lie strictly between 0 and 2");
  const CMatrix w = build_witness(rp);
  return mu * CMatrix::Identity(w.rows(), w.cols()) - w;
}

}  // namespace gridstate
