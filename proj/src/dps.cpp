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

#include "gridstate/dps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

constexpr int kMaxDenseSymDim = 1024;  // d^n cap for the dense projector

void occupations_rec(int d, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == d - 1) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= left; ++v) {
    cur.push_back(v);
    occupations_rec(d, left - v, cur, out);
    cur.pop_back();
  }
}

long long ipow(int b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

double multinomial(const std::vector<int>& occ) {
  int n = 0;
  double v = 1.0;
  for (int k : occ)
    for (int i = 1; i <= k; ++i) v *= static_cast<double>(++n) / i;
  return v;
}

CMatrix isometry_for(int d, int n, const std::vector<std::vector<int>>& occ) {
  const long long full = ipow(d, n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(occ.size()); ++i) index[occ[i]] = i;
  CMatrix V = CMatrix::Zero(full, static_cast<Eigen::Index>(occ.size()));
  std::vector<int> count(d);
  for (long long s = 0; s < full; ++s) {
    std::fill(count.begin(), count.end(), 0);
    long long t = s;
    for (int k = 0; k < n; ++k) {
      ++count[t % d];
      t /= d;
    }
    const int col = index.at(count);
    V(s, col) = 1.0 / std::sqrt(multinomial(count));
  }
  return V;
}

template <class Mat>
Mat project_psd_t(const Mat& a) {
  const Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const RVector ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

template <class Mat>
double lambda_max_t(const Mat& a) {
  const Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

template <class Mat>
Mat pt_t(const Mat& m, const Bipartition& p, Side side) {
  Mat out(m.rows(), m.cols());
  for (int i = 0; i < p.dA; ++i)
    for (int j = 0; j < p.dB; ++j)
      for (int k = 0; k < p.dA; ++k)
        for (int l = 0; l < p.dB; ++l) {
          const auto v = m(i * p.dB + j, k * p.dB + l);
          if (side == Side::B)
            out(i * p.dB + l, k * p.dB + j) = v;
          else
            out(k * p.dB + j, i * p.dB + l) = v;
        }
  return out;
}

// Linear map X -> L X with L^dag L = 1 on Hermitian matrices.
template <class Mat>
struct Cut {
  std::function<Mat(const Mat&)> forward;
  std::function<Mat(const Mat&)> adjoint;
};

// Sym^n -> Sym^j (x) Sym^(n-j): <s1 s2|s> = sqrt(M(s1) M(s2) / M(s)) when s1 + s2 = s.
RMatrix split_isometry(int d, int n, int j, const std::vector<std::vector<int>>& occ) {
  const auto left = occupation_vectors(d, j);
  const auto right = occupation_vectors(d, n - j);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(occ.size()); ++i) index[occ[i]] = i;
  RMatrix J = RMatrix::Zero(static_cast<Eigen::Index>(left.size() * right.size()), static_cast<Eigen::Index>(occ.size()));
  std::vector<int> sum(d);
  for (size_t a = 0; a < left.size(); ++a)
    for (size_t b = 0; b < right.size(); ++b) {
      for (int k = 0; k < d; ++k) sum[k] = left[a][k] + right[b][k];
      const int col = index.at(sum);
      J(static_cast<Eigen::Index>(a * right.size() + b), col) =
          std::sqrt(multinomial(left[a]) * multinomial(right[b]) / multinomial(sum));
    }
  return J;
}

template <class Mat>
std::vector<Cut<Mat>> build_cuts(const DpsProblem& prob) {
  std::vector<Cut<Mat>> cuts;
  cuts.push_back({[](const Mat& x) { return x; }, [](const Mat& y) { return y; }});
  const Bipartition kp{prob.keep_dim, prob.sym_dim};
  auto pt = [kp](const Mat& x) { return pt_t(x, kp, Side::A); };
  cuts.push_back({pt, pt});
  if (prob.extra_cuts) {
    // keep + j copies against the other n - j, on keep (x) Sym^j (x) Sym^(n-j).
    for (int j = 1; j < prob.level; ++j) {
      const RMatrix J = split_isometry(prob.ext_dim, prob.level, j, prob.occupations);
      const RMatrix Jr = Eigen::kroneckerProduct(RMatrix::Identity(prob.keep_dim, prob.keep_dim), J);
      const Mat Jf = Jr.cast<typename Mat::Scalar>();
      const int right = static_cast<int>(binomial(prob.ext_dim + prob.level - j - 1, prob.level - j));
      const Bipartition bp{static_cast<int>(Jf.rows()) / right, right};
      cuts.push_back({[Jf, bp](const Mat& x) { return pt_t(Mat(Jf * x * Jf.adjoint()), bp, Side::B); },
                      [Jf, bp](const Mat& y) { return Mat(Jf.adjoint() * pt_t(y, bp, Side::B) * Jf); }});
    }
  }
  return cuts;
}

template <class Mat>
DpsResult admm(const DpsProblem& prob, const SolverConfig& cfg, const Mat& C) {
  const std::vector<Cut<Mat>> cuts = build_cuts<Mat>(prob);
  const int m = static_cast<int>(cuts.size());
  const int N = prob.var_dim();
  const double alpha = cfg.over_relaxation;
  double rho = cfg.rho;

  Mat X = Mat::Identity(N, N) / static_cast<double>(N);
  std::vector<Mat> Z, U;
  for (const auto& c : cuts) {
    Z.push_back(c.forward(X));
    U.push_back(Mat::Zero(Z.back().rows(), Z.back().cols()));
  }

  // Any PSD S_i gives tr(C X) <= lambda_max(C + sum_i L_i^dag S_i) on the
  // feasible set; the scaled multipliers supply good candidates.
  auto certified = [&]() {
    double best = lambda_max_t(C);
    for (double sign : {-1.0, 1.0}) {
      Mat acc = C;
      for (int i = 1; i < m; ++i) acc += cuts[i].adjoint(project_psd_t(Mat(sign * rho * U[i])));
      best = std::min(best, lambda_max_t(acc));
    }
    return best;
  };
  auto objective = [&](const Mat& x) { return std::real((C * x).trace()); };

  DpsResult res;
  double r_norm = 0.0, s_norm = 0.0;
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    Mat M = Mat::Zero(N, N);
    for (int i = 0; i < m; ++i) M += cuts[i].adjoint(Z[i] - U[i]);
    X = M / m + C / (rho * m);
    X = (0.5 * (X + X.adjoint())).eval();
    X.diagonal().array() += (1.0 - std::real(X.trace())) / N;

    Mat dual_acc = Mat::Zero(N, N);
    r_norm = 0.0;
    for (int i = 0; i < m; ++i) {
      const Mat LX = cuts[i].forward(X);
      const Mat Ahat = alpha * LX + (1.0 - alpha) * Z[i];
      const Mat Zold = Z[i];
      Z[i] = project_psd_t(Mat(Ahat + U[i]));
      U[i] += Ahat - Z[i];
      r_norm += (LX - Z[i]).squaredNorm();
      dual_acc += cuts[i].adjoint(Z[i] - Zold);
    }
    r_norm = std::sqrt(r_norm);
    s_norm = rho * dual_acc.norm();

    if (cfg.record_trace && it % cfg.trace_every == 0) res.trace_rows.push_back({it, objective(X), r_norm, s_norm});
    if (r_norm < cfg.eps_primal && s_norm < cfg.eps_dual) {
      ++it;
      res.converged = true;
      break;
    }
    if (cfg.adapt_every > 0 && (it + 1) % cfg.adapt_every == 0) {
      if (r_norm > 10.0 * s_norm) {
        rho *= 2.0;
        for (auto& u : U) u /= 2.0;
      } else if (s_norm > 10.0 * r_norm) {
        rho /= 2.0;
        for (auto& u : U) u *= 2.0;
      }
    }
  }
  res.iterations = it;
  res.primal_residual = r_norm;
  res.dual_residual = s_norm;
  res.primal_objective = objective(X);
  res.mu_U = certified();
  res.trace = std::real(X.trace());
  res.X = X.template cast<cplx>();
  res.min_eigenvalue = min_eigenvalue(res.X);
  if (cfg.record_trace) res.trace_rows.push_back({it, res.primal_objective, r_norm, s_norm});
  return res;
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

std::vector<std::vector<int>> occupation_vectors(int d, int n) {
  if (d < 1 || n < 0) fail(ErrorCode::InvalidArgument, "need d >= 1 and n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  occupations_rec(d, n, cur, out);
  return out;
}

CMatrix permutation_operator(int d, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const long long full = ipow(d, n);
  CMatrix P = CMatrix::Zero(full, full);
  std::vector<int> in(n), out(n);
  for (long long s = 0; s < full; ++s) {
    long long t = s;
    for (int k = n - 1; k >= 0; --k) {
      in[k] = static_cast<int>(t % d);
      t /= d;
    }
    for (int k = 0; k < n; ++k) out[perm[k]] = in[k];
    long long o = 0;
    for (int k = 0; k < n; ++k) o = o * d + out[k];
    P(o, s) = 1.0;
  }
  return P;
}

SymmetricSpace sym_projector(int d, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "level must be at least 1");
  if (n > 8) fail(ErrorCode::Overflow, "n! permutation sum guarded at n <= 8");
  if (ipow(d, n) > kMaxDenseSymDim) fail(ErrorCode::Overflow, "d^n too large for a dense projector");
  SymmetricSpace sp;
  sp.d = d;
  sp.n = n;
  sp.occupations = occupation_vectors(d, n);
  sp.isometry = isometry_for(d, n, sp.occupations);
  if (n <= 6) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const long long full = ipow(d, n);
    sp.projector = CMatrix::Zero(full, full);
    double count = 0.0;
    do {
      sp.projector += permutation_operator(d, perm);
      count += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    sp.projector /= count;
  } else {
    sp.projector = sp.isometry * sp.isometry.adjoint();
  }
  return sp;
}

int level_cap(int ext_dim) {
  switch (ext_dim) {
    case 1: return 64;
    case 2: return 16;
    case 3: return 8;
    case 4: return 4;
    case 5: return 3;
    default: return 2;
  }
}

DpsProblem assemble(const CMatrix& W, const Bipartition& p, int level, bool extra_cuts, bool allow_large) {
  if (level < 1) fail(ErrorCode::InvalidArgument, "level must be at least 1");
  if (W.rows() != p.dim() || W.cols() != p.dim()) fail(ErrorCode::DimensionMismatch, "witness does not match bipartition");
  DpsProblem prob;
  prob.W = W;
  prob.dims = p;
  prob.level = level;
  prob.extra_cuts = extra_cuts;
  prob.extended_side = p.dA < p.dB ? Side::A : Side::B;
  prob.keep_dim = prob.extended_side == Side::A ? p.dB : p.dA;
  prob.ext_dim = prob.extended_side == Side::A ? p.dA : p.dB;
  if (level > level_cap(prob.ext_dim) && !allow_large)
    fail(ErrorCode::InvalidArgument, "level " + std::to_string(level) + " exceeds the default cap " +
                                         std::to_string(level_cap(prob.ext_dim)) + " for extension dimension " +
                                         std::to_string(prob.ext_dim) + "; opt in to run it");
  const long long sym = binomial(prob.ext_dim + level - 1, level);
  if (sym * prob.keep_dim > 20000) fail(ErrorCode::Overflow, "extension variable too large");
  prob.sym_dim = static_cast<int>(sym);
  prob.occupations = occupation_vectors(prob.ext_dim, level);

  // Reorder to keep (x) ext.
  const int K = prob.keep_dim, E = prob.ext_dim;
  CMatrix Wk(K * E, K * E);
  for (int k = 0; k < K; ++k)
    for (int e = 0; e < E; ++e)
      for (int k2 = 0; k2 < K; ++k2)
        for (int e2 = 0; e2 < E; ++e2) {
          const int r = prob.extended_side == Side::A ? e * K + k : k * E + e;
          const int c = prob.extended_side == Side::A ? e2 * K + k2 : k2 * E + e2;
          Wk(k * E + e, k2 * E + e2) = W(r, c);
        }

  // <s|(|e><e'| (x) 1)|s'> = sqrt(s_e s'_e') / n whenever s - e = s' - e'.
  struct Lift {
    int e, s;
    double amp;
  };
  std::map<std::vector<int>, std::vector<Lift>> by_rest;
  for (int s = 0; s < prob.sym_dim; ++s) {
    std::vector<int> occ = prob.occupations[s];
    for (int e = 0; e < E; ++e) {
      if (occ[e] == 0) continue;
      const double amp = std::sqrt(static_cast<double>(occ[e]));
      --occ[e];
      by_rest[occ].push_back({e, s, amp});
      ++occ[e];
    }
  }
  const int N = prob.var_dim();
  prob.W_hat = CMatrix::Zero(N, N);
  for (const auto& [rest, lifts] : by_rest) {
    for (const Lift& a : lifts)
      for (const Lift& b : lifts) {
        const double f = a.amp * b.amp / level;
        for (int k = 0; k < K; ++k)
          for (int k2 = 0; k2 < K; ++k2)
            prob.W_hat(k * prob.sym_dim + a.s, k2 * prob.sym_dim + b.s) += f * Wk(k * E + a.e, k2 * E + b.e);
      }
  }
  return prob;
}

DpsResult solve(const DpsProblem& prob, const SolverConfig& cfg) {
  if (!(cfg.eps_primal > 0.0 && cfg.eps_dual > 0.0)) fail(ErrorCode::InvalidArgument, "solver eps must be positive");
  const CMatrix& C = prob.W_hat;
  // Real objective: the optimum is attained on real matrices, so solve there.
  if (C.imag().norm() <= 1e-14 * std::max(1.0, C.norm())) return admm<RMatrix>(prob, cfg, RMatrix(C.real()));
  return admm<CMatrix>(prob, cfg, C);
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::string out = "iteration,objective,primal_residual,dual_residual\n";
  char buf[128];
  for (const TraceRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.iteration, r.objective, r.primal_residual,
                  r.dual_residual);
    out += buf;
  }
  return out;
}

}  // namespace gridstate
