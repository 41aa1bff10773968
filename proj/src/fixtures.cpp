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

#include "gridstate/fixtures.hpp"

#include <cstdlib>
#include <filesystem>

#include "gridstate/concentrate.hpp"
#include "gridstate/error.hpp"
#include "gridstate/io.hpp"

#ifndef GRIDSTATE_FIXTURE_DIR
#define GRIDSTATE_FIXTURE_DIR "fixtures"
#endif

namespace gridstate {

std::string fixture_dir() {
  if (const char* env = std::getenv("GRIDSTATE_FIXTURES"); env && *env) return env;
  return GRIDSTATE_FIXTURE_DIR;
}

std::string fixture_path(const std::string& name) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(fixture_dir()) / name;
  if (p.extension() != ".json") p += ".json";
  if (!fs::exists(p)) fail(ErrorCode::NotFound, "unknown fixture '" + name + "' (looked in " + fixture_dir() + ")");
  return p.string();
}

GridHypergraph load_fixture(const std::string& name) { return hypergraph_from_string(read_file(fixture_path(name))); }

std::vector<std::string> named_state_names() {
  return {"crosshatch", "rho_5_5", "rho_2", "rho_3", "rho_4_12", "horodecki"};
}

std::vector<std::string> table_state_names() { return {"crosshatch", "rho_5_5", "rho_2", "rho_3", "rho_4_12"}; }

NamedState named_state(const std::string& name) {
  NamedState s;
  s.name = name;
  if (name == "crosshatch") {
    s.display = "rho^CH";
    s.graph = crosshatch();
    s.sn_target_edge = 0;
    s.sn_k = 1;
  } else if (name == "rho_5_5") {
    s.display = "rho^{5,5}";
    s.graph = rho_5_5();
    s.sn_target_edge = 12;
    s.sn_k = 2;
  } else if (name == "rho_2" || name == "rho_3") {
    const int n = name == "rho_2" ? 2 : 3;
    s.display = "rho^(" + std::to_string(n) + ")";
    Family f = build_family(n);
    const FamilyMember& m = f.members.back();
    s.graph = m.graph;
    s.sn_target_edge = m.target_edge;
    s.sn_k = m.sn_label - 1;
  } else if (name == "rho_4_12") {
    s.display = "rho^{4,12}";
    s.graph = rho_4_12_hypergraph();
    s.sn_k = 2;
  } else if (name == "horodecki") {
    s.display = "rho^Hor";
    s.graph = horodecki_hypergraph();
    s.sn_k = 1;
  } else {
    fail(ErrorCode::NotFound, "unknown state '" + name + "'");
  }
  s.state = build_state(s.graph);
  return s;
}

}  // namespace gridstate
