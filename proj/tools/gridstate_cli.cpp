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

// Command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gridstate/gridstate.h"

namespace {

struct Failure {
  gs_status status;
};

void check(gs_status s) {
  if (s != GS_OK) throw Failure{s};
}

// Prints and frees a library string, or writes it to path when given.
void emit(char* text, const std::string& path = {}) {
  if (path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      gs_string_free(text);
      throw std::runtime_error("cannot write " + path);
    }
    std::fprintf(stderr, "wrote %s\n", path.c_str());
  }
  gs_string_free(text);
}

struct GraphHandle {
  gs_hypergraph* h = nullptr;
  explicit GraphHandle(const std::string& spec) { check(gs_hypergraph_resolve(spec.c_str(), &h)); }
  ~GraphHandle() { gs_hypergraph_free(h); }
};

struct StateHandle {
  gs_state* s = nullptr;
  explicit StateHandle(const std::string& spec) { check(gs_state_resolve(spec.c_str(), &s)); }
  ~StateHandle() { gs_state_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid hypergraph states: PPT checks, Schmidt-number certificates, witnesses and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  std::uint64_t seed = 1;
  double tol = 0.0;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--tol", tol, "Numerical rank / PPT tolerance (0 = default)");

  std::string input, out;

  auto* build = app.add_subcommand("build", "Dense state of a hypergraph");
  build->add_option("hypergraph", input, "Hypergraph JSON, built-in name or fixture")->required();
  build->add_option("--out", out, "Write the state here instead of stdout");

  auto* ppt = app.add_subcommand("ppt", "Graphical PPT check with numeric fallback");
  ppt->add_option("hypergraph", input, "Hypergraph JSON, built-in name or fixture")->required();

  int k = 1, target = 0;
  std::string hints;
  size_t budget = 0;
  auto* sn = app.add_subcommand("sn", "Certify SN > k by monomial minor branching");
  sn->add_option("hypergraph", input, "Hypergraph JSON, built-in name or fixture")->required();
  sn->add_option("--k", k, "Restricted-range level")->required();
  sn->add_option("--target", target, "Edge index")->required();
  sn->add_option("--prefer", hints, "Comma-separated monomials to branch on first");
  sn->add_option("--budget", budget, "Node budget");
  sn->add_option("--out", out, "Write the proof tree here");

  std::string seed_state = "crosshatch";
  int n = 1;
  auto* conc = app.add_subcommand("concentrate", "Schmidt-number concentration family");
  conc->add_option("--seed", seed_state, "Seed state (only crosshatch)");
  conc->add_option("--n", n, "Family index")->check(CLI::PositiveNumber);
  conc->add_option("--out", out, "Write the member hypergraph here");

  auto* extremal = app.add_subcommand("extremal", "PPT-extremality test");
  extremal->add_option("state", input, "State or hypergraph JSON, built-in name or fixture")->required();

  double mu = 0.0;
  auto* witness = app.add_subcommand("witness", "Witness W = P + Q^T_B (or mu 1 - W)");
  witness->add_option("state", input, "State or hypergraph JSON, built-in name or fixture")->required();
  witness->add_option("--mu", mu, "Return mu 1 - W, 0 < mu < 2");
  witness->add_option("--out", out, "Write the witness here");

  int starts = 100000;
  auto* lower = app.add_subcommand("mu-lower", "Seesaw lower bound on the product-state value of W");
  lower->add_option("state", input, "State or hypergraph JSON, built-in name or fixture")->required();
  lower->add_option("--starts", starts, "Random starts")->check(CLI::PositiveNumber);

  int level = 1;
  bool single_cut = false, allow_large = false;
  double eps = 1e-7;
  std::string trace;
  auto* upper = app.add_subcommand("mu-upper", "Symmetric-extension upper bound");
  upper->add_option("state", input, "State or hypergraph JSON, built-in name or fixture")->required();
  upper->add_option("--level", level, "Extension level")->check(CLI::PositiveNumber);
  upper->add_flag("--single-cut", single_cut, "Only the keep/extension partial transpose");
  upper->add_flag("--allow-large", allow_large, "Run levels above the default caps");
  upper->add_option("--eps", eps, "Solver residual tolerance");
  upper->add_option("--trace", trace, "Write the solver trace as CSV");

  bool all = false;
  std::string json_path;
  auto* report = app.add_subcommand("report", "Summary table over the bundled states");
  report->add_flag("--all", all, "Run every bundled state")->required();
  report->add_option("--starts", starts, "Seesaw starts per state")->check(CLI::PositiveNumber);
  report->add_option("--json", json_path, "Write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    char* text = nullptr;
    if (*build) {
      GraphHandle g(input);
      gs_state* s = nullptr;
      check(gs_state_build(g.h, &s));
      const gs_status st = gs_state_to_json(s, &text);
      gs_state_free(s);
      check(st);
      emit(text, out);
    } else if (*ppt) {
      GraphHandle g(input);
      check(gs_ppt_check(g.h, tol, &text));
      emit(text);
    } else if (*sn) {
      GraphHandle g(input);
      int certified = 0;
      check(gs_prove_sn(g.h, k, target, hints.empty() ? nullptr : hints.c_str(), budget, &text, &certified));
      emit(text, out);
      if (!certified) {
        std::fprintf(stderr, "prover stuck: no certificate for SN > %d\n", k);
        return 2;
      }
      std::fprintf(stderr, "certified: SN > %d\n", k);
    } else if (*conc) {
      if (seed_state != "crosshatch") {
        std::fprintf(stderr, "error: the family is seeded by crosshatch only\n");
        return 1;
      }
      check(gs_family(n, &text));
      emit(text);
      if (!out.empty()) {
        gs_hypergraph* h = nullptr;
        check(gs_family_member(n, &h));
        const gs_status st = gs_hypergraph_to_json(h, &text);
        gs_hypergraph_free(h);
        check(st);
        emit(text, out);
      }
    } else if (*extremal) {
      StateHandle s(input);
      check(gs_extremality(s.s, tol, &text));
      emit(text);
    } else if (*witness) {
      StateHandle s(input);
      check(gs_witness(s.s, tol, mu, &text));
      emit(text, out);
    } else if (*lower) {
      StateHandle s(input);
      check(gs_seesaw(s.s, tol, starts, seed, threads, &text));
      emit(text);
    } else if (*upper) {
      StateHandle s(input);
      check(gs_dps(s.s, tol, level, single_cut ? 0 : 1, allow_large ? 1 : 0, eps, trace.empty() ? nullptr : trace.c_str(),
                   &text));
      emit(text);
    } else if (*report) {
      char* table = nullptr;
      check(gs_report_all(starts, seed, threads, tol, &text, &table));
      emit(table);
      if (json_path.empty()) {
        emit(text);
      } else {
        emit(text, json_path);
      }
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error (%s): %s\n", gs_status_name(f.status), gs_last_error());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
