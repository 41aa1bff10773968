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

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "doctest.h"
#include "gridstate/concentrate.hpp"
#include "gridstate/error.hpp"
#include "gridstate/fixtures.hpp"
#include "gridstate/io.hpp"
#include "gridstate/prover.hpp"

using namespace gridstate;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

}  // namespace

TEST_CASE("fixture checksums") {
  std::ifstream sums(fixture_dir() + "/SHA256SUMS");
  REQUIRE(sums.good());
  std::string hash, name;
  int count = 0;
  while (sums >> hash >> name) {
    CHECK_MESSAGE(sha256_hex(read_file(fixture_dir() + "/" + name)) == hash, name);
    ++count;
  }
  CHECK(count == static_cast<int>(named_state_names().size()));
}

TEST_CASE("fixtures match the built-in constructions") {
  for (const auto& name : named_state_names()) {
    const NamedState s = named_state(name);
    const GridHypergraph g = load_fixture(name);
    CHECK_MESSAGE(g == s.graph, name);
    CHECK((build_state(g).m - s.state.m).norm() < 1e-12);
  }
  CHECK_THROWS_AS(load_fixture("no_such_state"), Error);
}

TEST_CASE("hypergraph JSON round trip") {
  for (const auto& g : {crosshatch(), rho_5_5(), rho_4_12_hypergraph()}) {
    const std::string text = hypergraph_to_string(g);
    CHECK(hypergraph_from_string(text) == g);
    CHECK(looks_like_hypergraph(json::parse(text)));
  }
}

TEST_CASE("state JSON round trip") {
  const DensityMatrix rho = build_state(rho_5_5());
  const DensityMatrix back = state_from_string(state_to_string(rho));
  CHECK(back.dims == rho.dims);
  CHECK((back.m - rho.m).norm() < 1e-15);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(hypergraph_from_string("{"), Error);
  CHECK_THROWS_AS(hypergraph_from_string(R"({"dims": [2, 2], "edges": [{"vertices": [[5, 0]]}]})"), Error);
  CHECK_THROWS_AS(state_from_string(R"({"dims": [2, 2]})"), Error);
}
