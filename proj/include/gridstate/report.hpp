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

// Per-state summary: PPT verdict, Schmidt-number bounds, extremality, and the
// seesaw / symmetric-extension bounds on the witness value.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridstate/extremal.hpp"
#include "gridstate/hypergraph.hpp"
#include "gridstate/io.hpp"

namespace gridstate {

struct ReportOptions {
  int starts = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  double tol = kDefaultRangeTol;
  double dps_eps = 1e-7;
  bool dps_extra_cuts = true;
  // Highest DPS level per state; states not listed run levels 1..2.
  std::map<std::string, int> max_level = {{"crosshatch", 4}, {"rho_3", 1}};
  bool run_prover = true;
};

struct LevelBound {
  int level = 1;
  double mu_U = 0.0;
  double primal = 0.0;
  double gap = 0.0;  // mu_U - mu_L
  int iterations = 0;
  bool converged = false;
  double seconds = 0.0;
};

struct StateReport {
  std::string name;
  std::string display;
  Bipartition dims;
  PptVerdict ppt;
  int sn_lower = 0;
  std::string sn_lower_source;
  size_t proof_nodes = 0;
  int sn_upper = 0;
  int rank_P = 0;
  int rank_Q = 0;
  ExtremalityVerdict extremality;
  double mu_L = 0.0;
  double stationarity = 0.0;
  int starts = 0;
  std::uint64_t seed = 0;
  std::uint64_t bezout = 0;
  std::vector<LevelBound> levels;
  std::map<std::string, double> seconds;
};

StateReport make_report(const std::string& name, const ReportOptions& opts = {});
/// All five table states; runs them on opts.threads workers, output in table order.
std::vector<StateReport> report_all(const ReportOptions& opts = {});

json report_to_json(const StateReport& r);
std::string report_table(const std::vector<StateReport>& rows);

}  // namespace gridstate
