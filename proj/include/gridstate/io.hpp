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

// JSON encodings.
//
//   hypergraph: {"dims":[dA,dB],"edges":[{"vertices":[[i,j],...],
//                "amplitudes":[{"p":1,"q":1,"r":2},...],"label":"..."}]}
//   state:      {"dims":[dA,dB],"data":[[re,im],...]}  row-major
//
// Amplitudes are always written in (p, q, r) form; floats with 17
// significant digits.

#pragma once

#include <string>

#include "json.hpp"

#include "gridstate/hypergraph.hpp"
#include "gridstate/prover.hpp"

namespace gridstate {

using json = nlohmann::ordered_json;

json hypergraph_to_json(const GridHypergraph& h);
GridHypergraph hypergraph_from_json(const json& j);
GridHypergraph hypergraph_from_string(const std::string& text);
std::string hypergraph_to_string(const GridHypergraph& h);

std::string state_to_string(const DensityMatrix& rho);
DensityMatrix state_from_string(const std::string& text);
DensityMatrix state_from_json(const json& j);

json proof_to_json(const ProofTree& tree);
ProofTree proof_from_json(const json& j);

json verdict_to_json(const PptVerdict& v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Hypergraph file or state file, told apart by the presence of "edges".
bool looks_like_hypergraph(const json& j);

std::string format_double(double x);

}  // namespace gridstate
