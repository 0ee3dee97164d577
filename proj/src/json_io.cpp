// Copyright 2026 The genrig Authors
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

#include "genrig/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace genrig {

std::string write_graph(const Graph& g) { return to_json(g).dump() + "\n"; }

Graph read_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph JSON needs keys \"n\" and \"edges\"");
  }
  const Json& n = j["n"];
  if (!n.is_number_integer() || n.get<std::int64_t>() < 0 ||
      n.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    throw InputError("\"n\" must be a non-negative integer");
  }
  if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
  EdgeList edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("each edge must be a pair of integers");
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n.get<std::int64_t>() || v >= n.get<std::int64_t>()) {
      throw InputError("edge endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(n.get<int>(), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_graph(ss.str());
}

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const EdgeList& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back(to_json(e));
  return a;
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = to_json(g.edges());
  return j;
}

Json to_json(const SeparabilityWitness& w) {
  Json j;
  j["E1"] = to_json(w.first);
  j["E2"] = to_json(w.second);
  j["E1_rank"] = w.first_rank;
  j["E2_rank"] = w.second_rank;
  return j;
}

Json to_json(const MatroidReport& r) {
  Json j;
  j["vertices"] = r.vertex_count;
  j["edges"] = r.edge_count;
  j["rank"] = r.rank;
  j["dof"] = r.dof ? Json(*r.dof) : Json(nullptr);
  j["rigid"] = r.is_rigid;
  j["redundantly_rigid"] = r.is_redundantly_rigid;
  j["independent"] = r.is_independent;
  j["bridges"] = to_json(r.bridges);
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  j["m_connected"] = r.is_m_connected;
  j["witness"] = r.separability_witness ? to_json(*r.separability_witness) : Json(nullptr);
  j["dim"] = r.dim;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["seeds"] = r.seeds;
  j["modulus"] = modulus_name(r.modulus);
  return j;
}

Json to_json(const StressTrial& t) {
  Json j;
  j["framework_seed"] = t.framework_seed;
  j["stress_seed"] = t.stress_seed;
  j["stress_space_dim"] = t.stress_space_dim;
  j["stress_rank"] = t.stress_rank;
  return j;
}

Json to_json(const GlobalRigidityVerdict& v) {
  Json j;
  j["decision"] = to_string(v.decision);
  j["globally_rigid"] = v.globally_rigid;
  j["dim"] = v.dim;
  j["method"] = v.method;
  j["target_rank"] = v.target_rank;
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  Json trials = Json::array();
  for (const auto& t : v.trials) trials.push_back(to_json(t));
  j["trials"] = std::move(trials);
  j["trials_used"] = v.trials_used;
  j["seed"] = v.seed;
  j["modulus"] = modulus_name(v.modulus);
  j["failure_probability_note"] = v.failure_probability_note;
  return j;
}

Json to_json(const HendricksonReport& h) {
  Json j;
  j["connectivity"] = h.connectivity;
  j["d_plus_1_connected"] = h.is_d_plus_1_connected;
  j["redundantly_rigid"] = h.is_redundantly_rigid;
  j["passes"] = h.passes_hendrickson;
  return j;
}

Json to_json(const ReconstructibilityVerdict& v) {
  Json j;
  j["decision"] = to_string(v.decision);
  j["rule"] = to_string(v.rule);
  j["explanation"] = v.explanation;
  j["global"] = v.global ? to_json(*v.global) : Json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (v.decomposition) {
    j["decomposition"] = {{"part1", v.decomposition->part1}, {"part2", v.decomposition->part2}};
  } else {
    j["decomposition"] = nullptr;
  }
  return j;
}

Json to_json(const PropertyResult& r) {
  Json j;
  j["property"] = r.property;
  j["corpus"] = r.corpus;
  j["dim"] = r.records.empty() ? 0 : r.records.front().dim;
  j["seeds"] = r.seeds;
  j["instances"] = r.records.size();
  j["instances_tested"] = r.instances_tested();
  j["not_applicable"] = r.not_applicable();
  j["passed"] = r.passed();
  Json viol = Json::array();
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json one;
    one["index"] = rec.index;
    one["label"] = rec.label;
    one["outcome"] = to_string(rec.outcome);
    one["details"] = rec.details;
    if (rec.outcome == Outcome::kViolation) {
      Json v = one;
      v["graph"] = to_json(rec.graph);
      viol.push_back(std::move(v));
    }
    recs.push_back(std::move(one));
  }
  j["violations"] = std::move(viol);
  j["records"] = std::move(recs);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace genrig
