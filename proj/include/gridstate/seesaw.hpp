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

// Lower bound on max <xy|W|xy> over product vectors by alternating
// top-eigenvector updates from many random starts.

#pragma once

#include <cstdint>
#include <vector>

#include "gridstate/linalg.hpp"

namespace gridstate {

struct SeesawOptions {
  int starts = 100000;
  std::uint64_t seed = 1;
  double tol = 1e-10;         // unused by polished runs when stationarity_tol > 0
  double stationarity_tol = 1e-11;
  double bulk_tol = 1e-7;     // looser stop for the bulk of the starts
  int max_iters = 2000;
  int threads = 1;
  bool record_trace = false;  // keep the objective sequence of the best run
};

struct SeesawResult {
  double mu_L = 0.0;
  CVector x, y;
  double lambda = 0.0;
  double stationarity = 0.0;
  long long iterations = 0;   // summed over all runs
  int starts = 0;
  int best_start = -1;
  std::uint64_t seed = 0;
  bool monotone = true;       // no half-step decreased the objective by more than 1e-12
  std::vector<double> trace;  // objective after each half-step of the polished run
};

SeesawResult seesaw(const CMatrix& W, const Bipartition& p, const SeesawOptions& opts = {});

struct Stationarity {
  double residual = 0.0;
  double lambda = 0.0;
};

/// max of |(1 (x) <y|) W |xy> - lambda |x>| and |(<x| (x) 1) W |xy> - lambda |y>|
/// with lambda = <xy|W|xy>.
Stationarity stationarity_check(const CMatrix& W, const Bipartition& p, const CVector& x, const CVector& y);

/// 3^(dA + dB + 1); throws Overflow past 2^63.
std::uint64_t bezout_bound(const Bipartition& p);

/// Deterministic per-start generator state: splitmix64 of seed ^ index.
std::uint64_t start_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace gridstate
