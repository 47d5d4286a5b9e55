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

// Exercises libtpclab through its C header only.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>
#include <string>

#include "tpc/tpc_api.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tpc_string_free(s);
  return out;
}

tpc_graph* parse(const char* g6) {
  tpc_graph* g = nullptr;
  REQUIRE(tpc_graph_from_graph6(g6, &g) == TPC_OK);
  return g;
}

SCENARIO("Graph handles") {
  tpc_graph* k3 = parse("Bw");
  REQUIRE(tpc_graph_order(k3) == 3);
  REQUIRE(tpc_graph_size(k3) == 3);
  REQUIRE(tpc_graph_is_connected(k3) == 1);
  tpc_graph* empty = nullptr;
  REQUIRE(tpc_graph_complement(k3, &empty) == TPC_OK);
  REQUIRE(tpc_graph_size(empty) == 0);
  char* text = nullptr;
  REQUIRE(tpc_graph_to_graph6(empty, &text) == TPC_OK);
  REQUIRE(take(text) == "B?");
  const int edges[] = {0, 1, 1, 2};
  tpc_graph* p3 = nullptr;
  REQUIRE(tpc_graph_from_edges(3, edges, 2, &p3) == TPC_OK);
  REQUIRE(tpc_graph_to_graph6(p3, &text) == TPC_OK);
  REQUIRE(take(text) == "Bg");
  REQUIRE(tpc_graph_isomorphic(p3, k3) == 0);
  tpc_graph_free(p3);
  tpc_graph_free(empty);
  tpc_graph_free(k3);
}

SCENARIO("Errors carry codes and messages") {
  tpc_graph* g = nullptr;
  REQUIRE(tpc_graph_from_graph6("B!", &g) == TPC_ERR_MALFORMED_GRAPH6);
  REQUIRE(g == nullptr);
  REQUIRE(std::string(tpc_last_error()).find("graph6") != std::string::npos);
  const int loop[] = {1, 1};
  REQUIRE(tpc_graph_from_edges(3, loop, 1, &g) == TPC_ERR_INVALID_ARGUMENT);
  tpc_graph_list* list = nullptr;
  REQUIRE(tpc_enumerate(9, TPC_FILTER_CONNECTED, &list) == TPC_ERR_SIZE_LIMIT);
  tpc_report* r = nullptr;
  REQUIRE(tpc_verify("thm9", 4, 4, nullptr, 1, &r) == TPC_ERR_UNKNOWN_STATEMENT);
  tpc_graph* fg = nullptr;
  tpc_coloring* fc = nullptr;
  const int bad[] = {1};
  REQUIRE(tpc_color_family("h1", bad, 1, &fg, &fc) == TPC_ERR_INVALID_FAMILY);
  tpc_graph* split = parse("CA");
  tpc_certificate* cert = nullptr;
  REQUIRE(tpc_solve(split, nullptr, &cert) == TPC_ERR_DISCONNECTED);
  tpc_graph_free(split);
  REQUIRE(tpc_graph_from_graph6(nullptr, &g) == TPC_ERR_INVALID_ARGUMENT);
}

SCENARIO("Enumeration") {
  tpc_graph_list* list = nullptr;
  REQUIRE(tpc_enumerate(5, TPC_FILTER_CONNECTED, &list) == TPC_OK);
  REQUIRE(tpc_graph_list_size(list) == 21);
  REQUIRE(tpc_graph_list_at(list, 21) == nullptr);
  tpc_graph_list_free(list);
  REQUIRE(tpc_enumerate(5, TPC_FILTER_COCONNECTED, &list) == TPC_OK);
  REQUIRE(tpc_graph_list_size(list) == 8);
  tpc_graph_list_free(list);
}

SCENARIO("Solving and re-checking") {
  tpc_graph* g = parse("Bw");
  tpc_certificate* cert = nullptr;
  REQUIRE(tpc_solve(g, nullptr, &cert) == TPC_OK);
  REQUIRE(tpc_certificate_value(cert) == 1);
  REQUIRE(tpc_certificate_status_of(cert) == TPC_CERT_EXACT);
  char* json = nullptr;
  REQUIRE(tpc_certificate_to_json(cert, &json) == TPC_OK);
  const auto j = nlohmann::json::parse(take(json));
  REQUIRE(j["tpc"] == 1);
  tpc_coloring* witness = nullptr;
  REQUIRE(tpc_certificate_witness(cert, &witness) == TPC_OK);
  tpc_check_result r;
  REQUIRE(tpc_check(g, witness, 0, &r) == TPC_OK);
  REQUIRE(r.connected == 1);
  REQUIRE(r.strong == -1);
  tpc_coloring* again = nullptr;
  REQUIRE(tpc_coloring_from_json(g, j["witness"].dump().c_str(), &again) == TPC_OK);
  REQUIRE(tpc_coloring_palette_size(again) == 1);
  tpc_coloring_free(again);
  tpc_coloring_free(witness);
  tpc_certificate_free(cert);
  tpc_graph_free(g);
}

SCENARIO("Checking P3 with two colors") {
  tpc_graph* p3 = parse("Bg");
  tpc_coloring* c = nullptr;
  REQUIRE(tpc_coloring_from_json(
              p3, R"({"n":3,"vertex_colors":[1,2,1],"edge_colors":[[0,1,1],[1,2,2]]})", &c) ==
          TPC_OK);
  tpc_check_result r;
  REQUIRE(tpc_check(p3, c, 1, &r) == TPC_OK);
  REQUIRE(r.connected == 0);
  REQUIRE(r.failing_u == 0);
  REQUIRE(r.failing_v == 2);
  REQUIRE(r.strong == 0);
  tpc_coloring_free(c);
  REQUIRE(tpc_coloring_from_json(p3, "{not json", &c) == TPC_ERR_MALFORMED_COLORING);
  tpc_graph_free(p3);
}

SCENARIO("Deciding k") {
  tpc_graph* p3 = parse("Bg");
  REQUIRE(tpc_decide(p3, 2, nullptr, nullptr) == 0);
  tpc_coloring* c = nullptr;
  REQUIRE(tpc_decide(p3, 3, nullptr, &c) == 1);
  REQUIRE(c != nullptr);
  tpc_coloring_free(c);
  tpc_budget b;
  tpc_budget_default(&b);
  b.node_limit = 0;
  REQUIRE(tpc_decide(p3, 3, &b, nullptr) < 0);
  tpc_graph_free(p3);
}

SCENARIO("Family colorings") {
  const int params[] = {4, 3, 0, 4};
  tpc_graph* g = nullptr;
  tpc_coloring* c = nullptr;
  REQUIRE(tpc_color_family("kst-plus-v", params, 4, &g, &c) == TPC_OK);
  REQUIRE(tpc_graph_order(g) == 8);
  REQUIRE(tpc_coloring_palette_size(c) <= 3);
  tpc_check_result r;
  REQUIRE(tpc_check(g, c, 0, &r) == TPC_OK);
  REQUIRE(r.connected == 1);
  tpc_coloring_free(c);
  tpc_graph_free(g);
  for (const char* name : {"cycle", "star", "complete", "h3", "thm6"}) {
    const int n[] = {6};
    REQUIRE(tpc_color_family(name, n, 1, &g, &c) == TPC_OK);
    REQUIRE(tpc_check(g, c, 0, &r) == TPC_OK);
    REQUIRE(r.connected == 1);
    REQUIRE(r.fully_assigned == 1);
    tpc_coloring_free(c);
    tpc_graph_free(g);
  }
}

SCENARIO("Verification reports") {
  tpc_report* r = nullptr;
  REQUIRE(tpc_verify("thm6", 4, 4, nullptr, 1, &r) == TPC_OK);
  REQUIRE(tpc_report_verdict(r) == TPC_VERIFIED);
  REQUIRE(tpc_report_examined(r) ==
          tpc_report_passes(r) + tpc_report_counterexamples(r) + tpc_report_timeouts(r));
  char* text = nullptr;
  REQUIRE(tpc_report_emit(r, TPC_FORMAT_TEXT, &text) == TPC_OK);
  REQUIRE(take(text).find("VERIFIED") != std::string::npos);
  tpc_report_free(r);
  REQUIRE(tpc_ng_scan(5, nullptr, nullptr, 1, &r) == TPC_OK);
  REQUIRE(tpc_report_rows_csv(r, &text) == TPC_OK);
  REQUIRE(take(text).rfind("graph6,tpc,tpc_complement,sum,status\n", 0) == 0);
  tpc_report_free(r);
}

}  // namespace
