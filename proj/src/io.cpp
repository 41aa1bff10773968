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

#include "gridstate/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridstate/error.hpp"

namespace gridstate {
namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::Parse, "schema: " + what); }

int get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + " must be an integer");
  return j.get<int>();
}

Bipartition parse_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2) schema("\"dims\" must be [dA, dB]");
  Bipartition p{get_int(j["dims"][0], "dims[0]"), get_int(j["dims"][1], "dims[1]")};
  if (p.dA <= 0 || p.dB <= 0) schema("dims must be positive");
  return p;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json hypergraph_to_json(const GridHypergraph& h) {
  json out;
  out["dims"] = {h.dims().dA, h.dims().dB};
  json edges = json::array();
  for (const auto& e : h.edges()) {
    json je;
    json vs = json::array();
    for (const auto& v : e.vertices) vs.push_back({v.i, v.j});
    je["vertices"] = vs;
    const bool all_one = std::all_of(e.amplitudes.begin(), e.amplitudes.end(), [](const Amplitude& a) { return a.is_one(); });
    if (!all_one) {
      json amps = json::array();
      for (const auto& a : e.amplitudes) amps.push_back({{"p", a.p()}, {"q", a.q()}, {"r", a.r()}});
      je["amplitudes"] = amps;
    }
    if (!e.label.empty()) je["label"] = e.label;
    edges.push_back(je);
  }
  out["edges"] = edges;
  return out;
}

GridHypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) schema("hypergraph must be an object");
  const Bipartition dims = parse_dims(j);
  if (!j.contains("edges") || !j["edges"].is_array()) schema("\"edges\" must be an array");
  std::vector<WeightedEdge> edges;
  for (size_t e = 0; e < j["edges"].size(); ++e) {
    const json& je = j["edges"][e];
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (!je.is_object() || !je.contains("vertices") || !je["vertices"].is_array())
      schema(where + " needs a \"vertices\" array");
    WeightedEdge edge;
    for (const json& v : je["vertices"]) {
      if (!v.is_array() || v.size() != 2) schema(where + ": vertex must be [i, j]");
      edge.vertices.push_back({get_int(v[0], where + " vertex"), get_int(v[1], where + " vertex")});
    }
    if (je.contains("amplitudes")) {
      if (!je["amplitudes"].is_array()) schema(where + ": \"amplitudes\" must be an array");
      for (const json& a : je["amplitudes"]) {
        if (!a.is_object() || !a.contains("p")) schema(where + ": amplitude needs \"p\"");
        const int p = get_int(a["p"], where + " p");
        const int q = a.contains("q") ? get_int(a["q"], where + " q") : 1;
        const int r = a.contains("r") ? get_int(a["r"], where + " r") : 1;
        edge.amplitudes.emplace_back(p, q, r);
      }
    }
    if (je.contains("label")) {
      if (!je["label"].is_string()) schema(where + ": \"label\" must be a string");
      edge.label = je["label"].get<std::string>();
    }
    edges.push_back(std::move(edge));
  }
  return GridHypergraph(dims, std::move(edges));
}

GridHypergraph hypergraph_from_string(const std::string& text) { return hypergraph_from_json(parse_text(text)); }

std::string hypergraph_to_string(const GridHypergraph& h) { return hypergraph_to_json(h).dump(2) + "\n"; }

std::string state_to_string(const DensityMatrix& rho) {
  std::ostringstream os;
  os << "{\"dims\":[" << rho.dims.dA << "," << rho.dims.dB << "],\"data\":[";
  for (Eigen::Index r = 0; r < rho.m.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.m.cols(); ++c) {
      if (r || c) os << ",";
      os << "[" << format_double(rho.m(r, c).real()) << "," << format_double(rho.m(r, c).imag()) << "]";
    }
  }
  os << "]}\n";
  return os.str();
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object()) schema("state must be an object");
  const Bipartition dims = parse_dims(j);
  if (!j.contains("data") || !j["data"].is_array()) schema("\"data\" must be an array");
  const auto n = static_cast<size_t>(dims.dim());
  if (j["data"].size() != n * n) schema("\"data\" must hold dim^2 entries");
  DensityMatrix rho{CMatrix(dims.dim(), dims.dim()), dims};
  for (size_t k = 0; k < n * n; ++k) {
    const json& z = j["data"][k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      schema("state entries must be [re, im]");
    rho.m(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) = cplx(z[0].get<double>(), z[1].get<double>());
  }
  return rho;
}

DensityMatrix state_from_string(const std::string& text) { return state_from_json(parse_text(text)); }

json proof_to_json(const ProofTree& tree) {
  json out;
  out["k"] = tree.k;
  out["target_edge"] = tree.target_edge;
  out["target_var"] = tree.target_var;
  out["variables"] = tree.var_names;
  out["certified"] = tree.certified;
  out["budget_exhausted"] = tree.budget_exhausted;
  out["root_monomial_minors"] = tree.root_monomials;
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    json jn;
    jn["id"] = n.id;
    jn["status"] = to_string(n.status);
    jn["erased"] = n.erased;
    if (n.status == NodeStatus::Branch) {
      jn["minor_rows"] = n.rows;
      jn["minor_cols"] = n.cols;
      jn["monomial"] = n.monomial;
      jn["monomial_text"] = n.monomial_text;
      jn["branch_vars"] = n.branch_vars;
      jn["children"] = n.children;
    }
    if (n.status == NodeStatus::Stuck) jn["residual"] = n.residual;
    nodes.push_back(jn);
  }
  out["nodes"] = nodes;
  return out;
}

ProofTree proof_from_json(const json& j) {
  try {
    ProofTree t;
    t.k = j.at("k").get<int>();
    t.target_edge = j.at("target_edge").get<int>();
    t.target_var = j.at("target_var").get<int>();
    t.var_names = j.at("variables").get<std::vector<std::string>>();
    t.certified = j.at("certified").get<bool>();
    t.budget_exhausted = j.value("budget_exhausted", false);
    t.root_monomials = j.value("root_monomial_minors", std::vector<std::string>{});
    for (const json& jn : j.at("nodes")) {
      ProofNode n;
      n.id = jn.at("id").get<int>();
      const std::string s = jn.at("status").get<std::string>();
      n.status = s == "branch" ? NodeStatus::Branch : s == "target_erased" ? NodeStatus::TargetErased : NodeStatus::Stuck;
      n.erased = jn.at("erased").get<std::vector<int>>();
      if (n.status == NodeStatus::Branch) {
        n.rows = jn.at("minor_rows").get<std::vector<int>>();
        n.cols = jn.at("minor_cols").get<std::vector<int>>();
        n.monomial = jn.at("monomial").get<std::vector<int>>();
        n.monomial_text = jn.value("monomial_text", std::string{});
        n.branch_vars = jn.at("branch_vars").get<std::vector<int>>();
        n.children = jn.at("children").get<std::vector<int>>();
      }
      if (n.status == NodeStatus::Stuck) n.residual = jn.value("residual", std::vector<std::string>{});
      t.nodes.push_back(std::move(n));
    }
    return t;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("schema: proof tree: ") + e.what());
  }
}

json verdict_to_json(const PptVerdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["min_eigenvalue_pt"] = v.min_eigenvalue_pt;
  out["bipartite"] = v.bipartite;
  out["degree_condition"] = v.degree_condition;
  out["numeric_ppt"] = v.numeric_ppt;
  json viol = json::array();
  for (const auto& x : v.degree_violations) viol.push_back({x.i, x.j});
  out["degree_violations"] = viol;
  out["details"] = v.details;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

bool looks_like_hypergraph(const json& j) { return j.is_object() && j.contains("edges"); }

}  // namespace gridstate
