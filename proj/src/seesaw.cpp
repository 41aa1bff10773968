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

#include "gridstate/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

constexpr int kPolishCandidates = 8;
constexpr double kMonotoneSlack = 1e-12;

// (1 (x) <y|) W (1 (x) |y>)
CMatrix reduce_to_A(const CMatrix& W, const Bipartition& p, const CVector& y) {
  CMatrix T(W.rows(), p.dA);
  for (int a = 0; a < p.dA; ++a) T.col(a) = W.middleCols(a * p.dB, p.dB) * y;
  CMatrix M = CMatrix::Zero(p.dA, p.dA);
  for (int a = 0; a < p.dA; ++a) M.row(a) = y.adjoint() * T.middleRows(a * p.dB, p.dB);
  return M;
}

// (<x| (x) 1) W (|x> (x) 1)
CMatrix reduce_to_B(const CMatrix& W, const Bipartition& p, const CVector& x) {
  CMatrix U = CMatrix::Zero(W.rows(), p.dB);
  for (int a = 0; a < p.dA; ++a) U += x(a) * W.middleCols(a * p.dB, p.dB);
  CMatrix M = CMatrix::Zero(p.dB, p.dB);
  for (int a = 0; a < p.dA; ++a) M += std::conj(x(a)) * U.middleRows(a * p.dB, p.dB);
  return M;
}

// Top eigenvector; inside a degenerate top eigenspace take the direction
// closest to prev.
CVector top_vector(const CMatrix& M, const CVector& prev, double& value) {
  const CMatrix H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  const auto& ev = es.eigenvalues();
  const int n = static_cast<int>(ev.size());
  value = ev(n - 1);
  const double gap_tol = 1e-12 * std::max(1.0, std::abs(value));
  int first = n - 1;
  while (first > 0 && value - ev(first - 1) < gap_tol) --first;
  if (first == n - 1) return es.eigenvectors().col(n - 1);
  const CMatrix V = es.eigenvectors().middleCols(first, n - first);
  CVector v = V * (V.adjoint() * prev);
  const double nv = v.norm();
  if (nv < 1e-12) return V.col(0);
  return v / nv;
}

CVector random_unit(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(nd(gen), nd(gen));
  return v / v.norm();
}

double objective(const CMatrix& W, const CVector& x, const CVector& y) {
  const CVector xy = tensor(x, y);
  return (xy.adjoint() * W * xy)(0).real();
}

struct Run {
  double value = -std::numeric_limits<double>::infinity();
  CVector x, y;
  int start = -1;
  long long iterations = 0;
  bool monotone = true;
  std::vector<double> trace;
};

// Alternate updates until a full sweep gains less than tol. With stat_tol > 0
// the run instead stops once the B-side equation holds to stat_tol (the A-side
// one holds exactly after each x update).
Run climb(const CMatrix& W, const Bipartition& p, CVector x, CVector y, double tol, int max_iters, bool trace,
          double stat_tol = 0.0) {
  Run r;
  double last = -std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iters; ++it) {
    double vy = 0.0, vx = 0.0;
    y = top_vector(reduce_to_B(W, p, x), y, vy);
    if (trace) r.trace.push_back(vy);
    if (vy < last - kMonotoneSlack) r.monotone = false;
    x = top_vector(reduce_to_A(W, p, y), x, vx);
    if (trace) r.trace.push_back(vx);
    if (vx < vy - kMonotoneSlack) r.monotone = false;
    ++r.iterations;
    bool done = vx - last < tol;
    if (stat_tol > 0.0) {
      const CMatrix mb = reduce_to_B(W, p, x);
      done = (mb * y - vx * y).norm() < stat_tol;
    }
    last = vx;
    if (done) break;
  }
  r.value = last;
  r.x = std::move(x);
  r.y = std::move(y);
  return r;
}

bool better(const Run& a, const Run& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.start < b.start;
}

}  // namespace

std::uint64_t start_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = (seed ^ index) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SeesawResult seesaw(const CMatrix& W, const Bipartition& p, const SeesawOptions& opts) {
  if (W.rows() != p.dim() || W.cols() != p.dim()) fail(ErrorCode::DimensionMismatch, "witness does not match bipartition");
  if (!is_hermitian(W, 1e-10)) fail(ErrorCode::InvalidArgument, "witness must be Hermitian");
  if (opts.starts < 1) fail(ErrorCode::InvalidArgument, "need at least one start");

  const int threads = std::max(1, opts.threads);
  std::vector<std::vector<Run>> best(threads);
  std::vector<long long> iters(threads, 0);
  auto worker = [&](int t) {
    auto& keep = best[t];
    for (int i = t; i < opts.starts; i += threads) {
      std::mt19937_64 gen(start_seed(opts.seed, static_cast<std::uint64_t>(i)));
      CVector x = random_unit(p.dA, gen);
      CVector y = random_unit(p.dB, gen);
      Run r = climb(W, p, std::move(x), std::move(y), opts.bulk_tol, opts.max_iters, false);
      r.start = i;
      iters[t] += r.iterations;
      if (static_cast<int>(keep.size()) < kPolishCandidates || better(r, keep.back())) {
        keep.push_back(std::move(r));
        std::sort(keep.begin(), keep.end(), better);
        if (static_cast<int>(keep.size()) > kPolishCandidates) keep.pop_back();
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<Run> cands;
  for (auto& v : best)
    for (auto& r : v) cands.push_back(std::move(r));
  std::sort(cands.begin(), cands.end(), better);
  if (static_cast<int>(cands.size()) > kPolishCandidates) cands.resize(kPolishCandidates);

  SeesawResult out;
  out.seed = opts.seed;
  out.starts = opts.starts;
  for (long long n : iters) out.iterations += n;
  Run top;
  for (const Run& c : cands) {
    Run r = climb(W, p, c.x, c.y, opts.tol, 50 * opts.max_iters, opts.record_trace, opts.stationarity_tol);
    r.start = c.start;
    out.iterations += r.iterations;
    if (better(r, top)) top = std::move(r);
  }
  out.x = top.x;
  out.y = top.y;
  out.best_start = top.start;
  out.monotone = top.monotone;
  out.trace = std::move(top.trace);
  out.mu_L = objective(W, out.x, out.y);
  const Stationarity st = stationarity_check(W, p, out.x, out.y);
  out.lambda = st.lambda;
  out.stationarity = st.residual;
  return out;
}

Stationarity stationarity_check(const CMatrix& W, const Bipartition& p, const CVector& x, const CVector& y) {
  if (x.size() != p.dA || y.size() != p.dB) fail(ErrorCode::DimensionMismatch, "vectors do not match bipartition");
  Stationarity s;
  s.lambda = objective(W, x, y);
  const double ra = (reduce_to_A(W, p, y) * x - s.lambda * x).norm();
  const double rb = (reduce_to_B(W, p, x) * y - s.lambda * y).norm();
  s.residual = std::max(ra, rb);
  return s;
}

std::uint64_t bezout_bound(const Bipartition& p) {
  if (p.dA < 1 || p.dB < 1) fail(ErrorCode::InvalidArgument, "dimensions must be positive");
  const long long e = static_cast<long long>(p.dA) + p.dB + 1;
  std::uint64_t v = 1;
  for (long long i = 0; i < e; ++i) {
    if (v > (std::uint64_t{1} << 63) / 3) fail(ErrorCode::Overflow, "Bezout bound exceeds 2^63");
    v *= 3;
  }
  return v;
}

}  // namespace gridstate
