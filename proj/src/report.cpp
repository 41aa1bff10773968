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

#include "gridstate/report.hpp"

#include <chrono>
#include <cstdio>
#include <future>

#include "gridstate/concentrate.hpp"
#include "gridstate/dps.hpp"
#include "gridstate/fixtures.hpp"
#include "gridstate/prover.hpp"
#include "gridstate/seesaw.hpp"

namespace gridstate {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

StateReport make_report(const std::string& name, const ReportOptions& opts) {
  StateReport r;
  auto t0 = Clock::now();
  const NamedState s = named_state(name);
  r.name = s.name;
  r.display = s.display;
  r.dims = s.state.dims;
  r.seconds["build"] = since(t0);

  t0 = Clock::now();
  r.ppt = graphical_ppt_check(s.graph);
  r.sn_upper = sn_upper_from_decomposition(s.graph);
  r.seconds["ppt"] = since(t0);

  t0 = Clock::now();
  r.extremality = extremality_test(s.state, opts.tol);
  const RangePair rp = range_pair(s.state, opts.tol);
  r.rank_P = rp.rank_P;
  r.rank_Q = rp.rank_Q;
  r.seconds["extremality"] = since(t0);

  t0 = Clock::now();
  r.sn_lower = r.extremality.is_extremal ? 2 : 1;
  r.sn_lower_source = r.extremality.is_extremal ? "extremal PPT, entangled" : "none";
  if (name == "rho_4_12") {
    const Sn3Certificate cert = certify_sn3_4x12(s.state);
    if (cert.pass) {
      r.sn_lower = 3;
      r.sn_lower_source = "certify_sn3_4x12";
    }
  } else if (opts.run_prover && s.sn_target_edge >= 0) {
    const ProofTree tree = prove_sn_exceeds(s.graph, s.sn_k, s.sn_target_edge);
    r.proof_nodes = tree.nodes.size();
    if (tree.certified) {
      r.sn_lower = s.sn_k + 1;
      r.sn_lower_source = "minor prover (" + std::to_string(tree.nodes.size()) + " nodes)";
    } else {
      r.sn_lower_source += "; prover stuck";
    }
  }
  r.seconds["schmidt"] = since(t0);

  const CMatrix W = build_witness(rp);
  t0 = Clock::now();
  SeesawOptions so;
  so.starts = opts.starts;
  so.seed = opts.seed;
  const SeesawResult sr = seesaw(W, s.state.dims, so);
  r.mu_L = sr.mu_L;
  r.stationarity = sr.stationarity;
  r.starts = sr.starts;
  r.seed = sr.seed;
  r.bezout = bezout_bound(s.state.dims);
  r.seconds["seesaw"] = since(t0);

  const auto it = opts.max_level.find(name);
  const int top = it == opts.max_level.end() ? 2 : it->second;
  SolverConfig cfg;
  cfg.eps_primal = cfg.eps_dual = opts.dps_eps;
  for (int level = 1; level <= top; ++level) {
    t0 = Clock::now();
    const DpsProblem prob = assemble(W, s.state.dims, level, opts.dps_extra_cuts, true);
    const DpsResult dr = solve(prob, cfg);
    LevelBound lb;
    lb.level = level;
    lb.mu_U = dr.mu_U;
    lb.primal = dr.primal_objective;
    lb.gap = dr.mu_U - r.mu_L;
    lb.iterations = dr.iterations;
    lb.converged = dr.converged;
    lb.seconds = since(t0);
    r.levels.push_back(lb);
  }
  return r;
}

std::vector<StateReport> report_all(const ReportOptions& opts) {
  const std::vector<std::string> names = table_state_names();
  std::vector<StateReport> out(names.size());
  const size_t threads = static_cast<size_t>(std::max(1, opts.threads));
  for (size_t base = 0; base < names.size(); base += threads) {
    std::vector<std::future<StateReport>> jobs;
    for (size_t i = base; i < std::min(names.size(), base + threads); ++i)
      jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                [&opts, n = names[i]] { return make_report(n, opts); }));
    for (size_t i = 0; i < jobs.size(); ++i) out[base + i] = jobs[i].get();
  }
  return out;
}

json report_to_json(const StateReport& r) {
  json j;
  j["name"] = r.name;
  j["display"] = r.display;
  j["dims"] = {r.dims.dA, r.dims.dB};
  j["ppt"] = verdict_to_json(r.ppt);
  j["sn_lower"] = r.sn_lower;
  j["sn_lower_source"] = r.sn_lower_source;
  j["proof_nodes"] = r.proof_nodes;
  j["sn_upper"] = r.sn_upper;
  j["rank_P"] = r.rank_P;
  j["rank_Q"] = r.rank_Q;
  j["extremality"] = {{"multiplicity_of_2", r.extremality.multiplicity_of_2},
                      {"second_eigenvalue_gap", r.extremality.second_eigenvalue_gap},
                      {"alignment", r.extremality.alignment},
                      {"is_extremal", r.extremality.is_extremal}};
  j["mu_L"] = r.mu_L;
  j["stationarity"] = r.stationarity;
  j["starts"] = r.starts;
  j["seed"] = r.seed;
  j["bezout_bound"] = r.bezout;
  json levels = json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"level", l.level},
                      {"mu_U", l.mu_U},
                      {"primal", l.primal},
                      {"gap", l.gap},
                      {"iterations", l.iterations},
                      {"converged", l.converged},
                      {"seconds", l.seconds}});
  j["mu_U"] = levels;
  j["seconds"] = r.seconds;
  return j;
}

std::string report_table(const std::vector<StateReport>& rows) {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-12s %-6s %-22s %-7s %-5s %-5s %-8s %-16s %-16s %-6s %-10s\n", "state", "dims",
                "ppt (graphical)", "ppt_num", "SN>=", "SN<=", "mult(2)", "mu_L", "mu_U", "level", "gap");
  out += buf;
  for (const auto& r : rows) {
    const std::string dims = std::to_string(r.dims.dA) + "x" + std::to_string(r.dims.dB);
    const LevelBound* best = nullptr;
    for (const auto& l : r.levels)
      if (!best || l.mu_U < best->mu_U) best = &l;
    std::snprintf(buf, sizeof buf, "%-12s %-6s %-22s %-7s %-5d %-5d %-8d %-16.13f %-16.13f %-6d %-10.3e\n",
                  r.display.c_str(), dims.c_str(), to_string(r.ppt.status).c_str(), r.ppt.numeric_ppt ? "yes" : "no",
                  r.sn_lower, r.sn_upper, r.extremality.multiplicity_of_2, r.mu_L, best ? best->mu_U : 0.0, best ? best->level : 0, best ? best->gap : 0.0);
    out += buf;
  }
  return out;
}

}  // namespace gridstate
