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

// Bundled states by name and the on-disk fixture directory.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridstate/hypergraph.hpp"

namespace gridstate {

/// $GRIDSTATE_FIXTURES when set, else the directory compiled in.
std::string fixture_dir();
/// Path of a fixture by name ("crosshatch" or "crosshatch.json"); throws NotFound.
std::string fixture_path(const std::string& name);
GridHypergraph load_fixture(const std::string& name);

/// crosshatch, rho_5_5, rho_2, rho_3, rho_4_12, horodecki.
std::vector<std::string> named_state_names();
/// The five states of the summary table, in table order.
std::vector<std::string> table_state_names();

struct NamedState {
  std::string name;
  std::string display;  // e.g. "rho^(2)"
  GridHypergraph graph;
  DensityMatrix state;
  int sn_target_edge = -1;  // edge whose vector sits outside the restricted range
  int sn_k = 0;             // prover level: certifies SN > sn_k
};

/// Built in code (not read from disk). Throws NotFound for unknown names.
NamedState named_state(const std::string& name);

}  // namespace gridstate
