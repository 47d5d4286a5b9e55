// Copyright 2026 The tpc-lab Authors
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

#include "tpc/json_io.hpp"

#include "tpc/error.hpp"
#include "tpc/graph6.hpp"

namespace tpc {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedColoring, "coloring JSON: " + why);
}

Color read_color(const Json& value) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > 1'000'000) {
    malformed("colors must be integers in 0..1000000");
  }
  return value.get<Color>();
}

}  // namespace

Json coloring_to_json(const Graph& g, const TotalColoring& c) {
  Json j;
  j["n"] = g.order();
  j["vertex_colors"] = c.vertex_colors;
  Json edges = Json::array();
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    edges.push_back({e.u, e.v, c.edge_colors[id]});
  }
  j["edge_colors"] = std::move(edges);
  return j;
}

TotalColoring coloring_from_json(const Graph& g, const Json& j) {
  if (!j.is_object()) malformed("expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() != g.order()) {
    malformed("\"n\" missing or different from the graph order");
  }
  if (!j.contains("vertex_colors") || !j["vertex_colors"].is_array() ||
      static_cast<int>(j["vertex_colors"].size()) != g.order()) {
    malformed("\"vertex_colors\" must list one color per vertex");
  }
  if (!j.contains("edge_colors") || !j["edge_colors"].is_array()) {
    malformed("\"edge_colors\" must be an array of [u, v, color]");
  }
  TotalColoring c(g);
  for (int v = 0; v < g.order(); ++v) c.vertex_colors[v] = read_color(j["vertex_colors"][v]);
  std::vector<bool> seen(g.size(), false);
  for (const Json& entry : j["edge_colors"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      malformed("edge entry must be [u, v, color]");
    }
    const int u = entry[0].get<int>(), v = entry[1].get<int>();
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
        g.edge_id(u, v) < 0) {
      malformed("edge [" + std::to_string(u) + ", " + std::to_string(v) +
                "] is not an edge of the graph");
    }
    const int id = g.edge_id(u, v);
    if (seen[id]) malformed("edge listed twice");
    seen[id] = true;
    c.edge_colors[id] = read_color(entry[2]);
  }
  for (int id = 0; id < g.size(); ++id) {
    if (!seen[id]) malformed("edge [" + std::to_string(g.edge(id).u) + ", " +
                             std::to_string(g.edge(id).v) + "] has no color");
  }
  return c;
}

Json certificate_to_json(const TpcCertificate& cert) {
  Json j;
  j["graph6"] = to_graph6(cert.graph);
  j["tpc"] = cert.value;
  j["lower"] = cert.lower;
  j["status"] = to_string(cert.status);
  j["lower_reason"] = to_string(cert.lower_reason);
  j["nodes"] = cert.nodes;
  j["witness"] = coloring_to_json(cert.graph, cert.witness);
  Json pairs = Json::array();
  for (const auto& w : cert.pair_witnesses) {
    pairs.push_back({w.u, w.v, w.path ? Json(w.path->vertices) : Json::array()});
  }
  j["pair_witnesses"] = std::move(pairs);
  return j;
}

TpcCertificate certificate_from_json(const Json& j) {
  try {
    TpcCertificate cert;
    cert.graph = from_graph6(j.at("graph6").get<std::string>());
    cert.value = j.at("tpc").get<int>();
    cert.lower = j.value("lower", cert.value);
    const auto status = j.at("status").get<std::string>();
    cert.status = status == "Exact"        ? CertificateStatus::Exact
                  : status == "BoundsOnly" ? CertificateStatus::BoundsOnly
                                           : CertificateStatus::Timeout;
    cert.lower_reason = j.at("lower_reason").get<std::string>() == "bound-match"
                            ? LowerProof::BoundMatch
                            : LowerProof::ExhaustedBelow;
    cert.nodes = j.value("nodes", std::int64_t{0});
    cert.witness = coloring_from_json(cert.graph, j.at("witness"));
    for (const Json& p : j.at("pair_witnesses")) {
      PairWitness w{p.at(0).get<int>(), p.at(1).get<int>(), std::nullopt};
      auto vs = p.at(2).get<std::vector<int>>();
      if (!vs.empty()) w.path = PathWitness{std::move(vs)};
      cert.pair_witnesses.push_back(std::move(w));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedColoring, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace tpc
