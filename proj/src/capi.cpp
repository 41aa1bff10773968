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

#include "gridstate/gridstate.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "gridstate/concentrate.hpp"
#include "gridstate/dps.hpp"
#include "gridstate/error.hpp"
#include "gridstate/extremal.hpp"
#include "gridstate/fixtures.hpp"
#include "gridstate/io.hpp"
#include "gridstate/prover.hpp"
#include "gridstate/report.hpp"
#include "gridstate/seesaw.hpp"

struct gs_hypergraph {
  gridstate::GridHypergraph g;
};

struct gs_state {
  gridstate::DensityMatrix s;
};

namespace {

using namespace gridstate;

thread_local std::string g_error;

template <class F>
gs_status guard(F&& f) {
  try {
    g_error.clear();
    f();
    return GS_OK;
  } catch (const Error& e) {
    g_error = e.what();
    return static_cast<gs_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_error = e.what();
    return GS_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) fail(ErrorCode::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

std::vector<std::string> split_csv(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::string s(text);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

bool is_named(const std::string& name) {
  for (const auto& n : named_state_names())
    if (n == name) return true;
  return false;
}

GridHypergraph resolve_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return hypergraph_from_string(read_file(spec));
  if (is_named(spec)) return named_state(spec).graph;
  return load_fixture(spec);
}

DensityMatrix resolve_state(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    const json j = json::parse(read_file(spec), nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "'" + spec + "' is not valid JSON");
    if (looks_like_hypergraph(j)) return build_state(hypergraph_from_json(j));
    return state_from_json(j);
  }
  if (is_named(spec)) return named_state(spec).state;
  return build_state(load_fixture(spec));
}

json member_json(const FamilyMember& m) {
  return {{"n", m.n},
          {"dims", {m.graph.dims().dA, m.graph.dims().dB}},
          {"edges", m.graph.num_edges()},
          {"sn_label", m.sn_label},
          {"target_edge", m.target_edge},
          {"r_B", m.r_B},
          {"nesting_residual", m.nesting_residual},
          {"min_pt_eigenvalue", m.min_pt_eigenvalue},
          {"render_residual", m.render_residual}};
}

}  // namespace

extern "C" {

const char* gs_version(void) { return "1.0.0"; }

const char* gs_last_error(void) { return g_error.c_str(); }

const char* gs_status_name(gs_status s) {
  switch (s) {
    case GS_OK: return "ok";
    case GS_INVALID_ARGUMENT: return "invalid_argument";
    case GS_DIMENSION_MISMATCH: return "dimension_mismatch";
    case GS_PARSE: return "parse";
    case GS_NOT_PPT: return "not_ppt";
    case GS_CONTEXT_VIOLATION: return "context_violation";
    case GS_OVERFLOW: return "overflow";
    case GS_NOT_FOUND: return "not_found";
    case GS_INTERNAL: return "internal";
  }
  return "unknown";
}

void gs_string_free(char* s) { std::free(s); }

gs_status gs_hypergraph_from_json(const char* text, gs_hypergraph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new gs_hypergraph{hypergraph_from_string(text)};
  });
}

gs_status gs_hypergraph_load(const char* path, gs_hypergraph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new gs_hypergraph{hypergraph_from_string(read_file(path))};
  });
}

gs_status gs_hypergraph_resolve(const char* spec, gs_hypergraph** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new gs_hypergraph{resolve_graph(spec)};
  });
}

gs_status gs_hypergraph_to_json(const gs_hypergraph* h, char** out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = dup(hypergraph_to_string(h->g));
  });
}

gs_status gs_hypergraph_dims(const gs_hypergraph* h, int* dA, int* dB) {
  return guard([&] {
    need(h, "hypergraph");
    if (dA) *dA = h->g.dims().dA;
    if (dB) *dB = h->g.dims().dB;
  });
}

gs_status gs_hypergraph_num_edges(const gs_hypergraph* h, size_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = h->g.num_edges();
  });
}

void gs_hypergraph_free(gs_hypergraph* h) { delete h; }

gs_status gs_state_build(const gs_hypergraph* h, gs_state** out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = new gs_state{build_state(h->g)};
  });
}

gs_status gs_state_from_json(const char* text, gs_state** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new gs_state{state_from_string(text)};
  });
}

gs_status gs_state_resolve(const char* spec, gs_state** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new gs_state{resolve_state(spec)};
  });
}

gs_status gs_state_to_json(const gs_state* s, char** out) {
  return guard([&] {
    need(s, "state");
    need(out, "out");
    *out = dup(state_to_string(s->s));
  });
}

gs_status gs_state_dims(const gs_state* s, int* dA, int* dB) {
  return guard([&] {
    need(s, "state");
    if (dA) *dA = s->s.dims.dA;
    if (dB) *dB = s->s.dims.dB;
  });
}

gs_status gs_state_entry(const gs_state* s, int row, int col, double* re, double* im) {
  return guard([&] {
    need(s, "state");
    const int d = s->s.dims.dim();
    if (row < 0 || col < 0 || row >= d || col >= d) fail(ErrorCode::InvalidArgument, "entry index out of range");
    if (re) *re = s->s.m(row, col).real();
    if (im) *im = s->s.m(row, col).imag();
  });
}

void gs_state_free(gs_state* s) { delete s; }

gs_status gs_ppt_check(const gs_hypergraph* h, double tol, char** json_out) {
  return guard([&] {
    need(h, "hypergraph");
    need(json_out, "json_out");
    *json_out = dup(verdict_to_json(graphical_ppt_check(h->g, tol > 0 ? tol : 1e-10)).dump(2) + "\n");
  });
}

gs_status gs_prove_sn(const gs_hypergraph* h, int k, int target, const char* hints, size_t node_budget,
                      char** json_out, int* certified) {
  return guard([&] {
    need(h, "hypergraph");
    need(json_out, "json_out");
    ProverOptions opts;
    if (node_budget > 0) opts.node_budget = node_budget;
    opts.preferred = split_csv(hints);
    const ProofTree tree = prove_sn_exceeds(h->g, k, target, opts);
    if (certified) *certified = tree.certified ? 1 : 0;
    *json_out = dup(proof_to_json(tree).dump(2) + "\n");
  });
}

gs_status gs_replay_proof(const gs_hypergraph* h, const char* proof_json, int* ok, char** message) {
  return guard([&] {
    need(h, "hypergraph");
    need(proof_json, "proof_json");
    const json j = json::parse(proof_json, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "proof is not valid JSON");
    const ReplayReport rep = replay_proof(h->g, proof_from_json(j));
    if (ok) *ok = rep.ok ? 1 : 0;
    if (message) *message = dup(rep.message);
  });
}

gs_status gs_sn_upper(const gs_hypergraph* h, int* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = sn_upper_from_decomposition(h->g);
  });
}

gs_status gs_family(int n, char** json_out) {
  return guard([&] {
    need(json_out, "json_out");
    const Family f = build_family(n);
    json j;
    json members = json::array();
    for (const auto& m : f.members) members.push_back(member_json(m));
    j["members"] = members;
    const StructuralEvidence ev = structural_evidence(f, n);
    j["evidence"] = {{"n", ev.n},
                     {"nesting_ok", ev.nesting_ok},
                     {"ppt_ok", ev.ppt_ok},
                     {"dims_ok", ev.dims_ok},
                     {"recursion_ok", ev.recursion_ok},
                     {"sn_upper", ev.sn_upper},
                     {"sn_label", ev.sn_label},
                     {"label", ev.label},
                     {"lines", ev.lines}};
    *json_out = dup(j.dump(2) + "\n");
  });
}

gs_status gs_family_member(int n, gs_hypergraph** out) {
  return guard([&] {
    need(out, "out");
    *out = new gs_hypergraph{build_family(n).members.back().graph};
  });
}

gs_status gs_certify_4x12(char** json_out) {
  return guard([&] {
    need(json_out, "json_out");
    const Sn3Certificate c = certify_sn3_4x12(build_4x12());
    const json j = {{"structure", c.structure},
                    {"kernel_block", c.kernel_block},
                    {"cascade", c.cascade},
                    {"nesting", c.nesting},
                    {"horodecki_entangled", c.horodecki_entangled},
                    {"sn_upper", c.sn_upper},
                    {"nesting_residual", c.nesting_residual},
                    {"pass", c.pass},
                    {"lines", c.lines}};
    *json_out = dup(j.dump(2) + "\n");
  });
}

gs_status gs_extremality(const gs_state* s, double tol, char** json_out) {
  return guard([&] {
    need(s, "state");
    need(json_out, "json_out");
    const double t = tol > 0 ? tol : kDefaultRangeTol;
    const ExtremalityVerdict v = extremality_test(s->s, t);
    const RangePair rp = range_pair(s->s, t);
    const json j = {{"multiplicity_of_2", v.multiplicity_of_2},
                    {"second_eigenvalue_gap", v.second_eigenvalue_gap},
                    {"max_eigenvalue", v.max_eigenvalue},
                    {"alignment", v.alignment},
                    {"is_extremal", v.is_extremal},
                    {"method", v.dense ? "dense" : "kernel"},
                    {"rank_P", rp.rank_P},
                    {"rank_Q", rp.rank_Q}};
    *json_out = dup(j.dump(2) + "\n");
  });
}

gs_status gs_witness(const gs_state* s, double tol, double mu, char** json_out) {
  return guard([&] {
    need(s, "state");
    need(json_out, "json_out");
    const RangePair rp = range_pair(s->s, tol > 0 ? tol : kDefaultRangeTol);
    const CMatrix w = mu > 0 ? indecomposable_witness(rp, mu) : build_witness(rp);
    *json_out = dup(state_to_string({w, s->s.dims}));
  });
}

gs_status gs_seesaw(const gs_state* s, double tol, int starts, uint64_t seed, int threads, char** json_out) {
  return guard([&] {
    need(s, "state");
    need(json_out, "json_out");
    const CMatrix W = build_witness(range_pair(s->s, tol > 0 ? tol : kDefaultRangeTol));
    SeesawOptions o;
    o.starts = starts;
    o.seed = seed;
    o.threads = threads;
    const SeesawResult r = seesaw(W, s->s.dims, o);
    json x = json::array(), y = json::array();
    for (Eigen::Index i = 0; i < r.x.size(); ++i) x.push_back({r.x(i).real(), r.x(i).imag()});
    for (Eigen::Index i = 0; i < r.y.size(); ++i) y.push_back({r.y(i).real(), r.y(i).imag()});
    const json j = {{"mu_L", r.mu_L},
                    {"lambda", r.lambda},
                    {"stationarity", r.stationarity},
                    {"starts", r.starts},
                    {"seed", r.seed},
                    {"best_start", r.best_start},
                    {"iterations", r.iterations},
                    {"monotone", r.monotone},
                    {"bezout_bound", bezout_bound(s->s.dims)},
                    {"x", x},
                    {"y", y}};
    *json_out = dup(j.dump(2) + "\n");
  });
}

gs_status gs_dps(const gs_state* s, double tol, int level, int extra_cuts, int allow_large, double eps,
                 const char* trace_csv_path, char** json_out) {
  return guard([&] {
    need(s, "state");
    need(json_out, "json_out");
    const CMatrix W = build_witness(range_pair(s->s, tol > 0 ? tol : kDefaultRangeTol));
    const DpsProblem prob = assemble(W, s->s.dims, level, extra_cuts != 0, allow_large != 0);
    SolverConfig cfg;
    if (eps > 0) cfg.eps_primal = cfg.eps_dual = eps;
    cfg.record_trace = trace_csv_path != nullptr;
    const DpsResult r = solve(prob, cfg);
    if (trace_csv_path) write_file(trace_csv_path, trace_csv(r.trace_rows));
    const json j = {{"level", level},
                    {"extended_side", prob.extended_side == Side::A ? "A" : "B"},
                    {"sym_dim", prob.sym_dim},
                    {"var_dim", prob.var_dim()},
                    {"extra_cuts", prob.extra_cuts},
                    {"mu_U", r.mu_U},
                    {"primal_objective", r.primal_objective},
                    {"primal_residual", r.primal_residual},
                    {"dual_residual", r.dual_residual},
                    {"min_eigenvalue", r.min_eigenvalue},
                    {"trace", r.trace},
                    {"iterations", r.iterations},
                    {"converged", r.converged}};
    *json_out = dup(j.dump(2) + "\n");
  });
}

gs_status gs_report_all(int starts, uint64_t seed, int threads, double tol, char** json_out, char** text_out) {
  return guard([&] {
    ReportOptions o;
    if (starts > 0) o.starts = starts;
    o.seed = seed;
    o.threads = threads;
    if (tol > 0) o.tol = tol;
    const auto rows = report_all(o);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report_to_json(r));
    if (json_out) *json_out = dup(arr.dump(2) + "\n");
    if (text_out) *text_out = dup(report_table(rows));
  });
}

}  // extern "C"
