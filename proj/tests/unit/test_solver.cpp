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

#include <catch2/catch_amalgamated.hpp>

#include "support/properties.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"
#include "tpc/json_io.hpp"
#include "tpc/solver.hpp"

namespace tpc {
namespace {

Graph family(FamilyKind kind, std::vector<int> params) {
  return build_family({kind, std::move(params)});
}

SCENARIO("Bounds") {
  GIVEN("K6") {
    const Bounds b = compute_bounds(family(FamilyKind::Complete, {6}));
    REQUIRE(b.lower == 1);
    REQUIRE(b.upper == 1);
    REQUIRE(b.lower_reason == LowerReason::Complete);
  }
  GIVEN("S5") {
    const Bounds b = compute_bounds(family(FamilyKind::Star, {5}));
    REQUIRE(b.lower == 5);
    REQUIRE(b.lower_reason == LowerReason::Bridges);
    REQUIRE(b.upper == 5);
    REQUIRE(b.upper_reason == UpperReason::SpanningTree);
    REQUIRE(is_total_proper_connected(family(FamilyKind::Star, {5}), b.upper_witness));
  }
  GIVEN("C6") {
    const Bounds b = compute_bounds(family(FamilyKind::Cycle, {6}));
    REQUIRE(b.lower == 3);
    REQUIRE(b.upper == 3);
    REQUIRE(b.upper_reason == UpperReason::Traceable);
  }
  REQUIRE_THROWS_AS(compute_bounds(Graph(3)), Error);
}

SCENARIO("Deciding k") {
  const Graph p3 = family(FamilyKind::Path, {3});
  REQUIRE(decide_k(p3, 2).status == DecideStatus::Infeasible);
  const auto three = decide_k(p3, 3);
  REQUIRE(three.status == DecideStatus::Feasible);
  REQUIRE(is_total_proper_connected(p3, *three.coloring));
  const Graph k4 = family(FamilyKind::Complete, {4});
  const auto one = decide_k(k4, 1);
  REQUIRE(one.status == DecideStatus::Feasible);
  REQUIRE(one.coloring->palette_size() == 1);
  GIVEN("a budget of one node") {
    SolveBudget tiny;
    tiny.node_limit = 1;
    REQUIRE(decide_k(family(FamilyKind::Star, {5}), 4, tiny).status == DecideStatus::Timeout);
  }
  REQUIRE_THROWS_AS(decide_k(p3, 0), Error);
}

SCENARIO("Exact values") {
  auto value = [](const Graph& g) {
    const auto cert = tpc_exact(g);
    REQUIRE(cert.status == CertificateStatus::Exact);
    REQUIRE(cert.lower == cert.value);
    REQUIRE(check_total_proper_connected(g, cert.witness).connected);
    REQUIRE(cert.witness.palette_size() <= cert.value);
    REQUIRE(cert.pair_witnesses.size() ==
            static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    return cert.value;
  };
  REQUIRE(value(family(FamilyKind::DoubleStar, {2, 3})) == 4);
  REQUIRE(value(family(FamilyKind::CompleteBipartite, {3, 3})) == 3);
  REQUIRE(value(family(FamilyKind::H3, {6})) == 4);
  REQUIRE(value(family(FamilyKind::H2, {5})) == 3);
  GIVEN("a value that needs search") {
    const auto cert = tpc_exact(family(FamilyKind::H3, {6}));
    REQUIRE(cert.lower_reason == LowerProof::ExhaustedBelow);
    REQUIRE(cert.nodes > 0);
  }
  GIVEN("a tree") {
    const auto cert = tpc_exact(family(FamilyKind::Star, {6}));
    REQUIRE(cert.lower_reason == LowerProof::BoundMatch);
    REQUIRE(cert.nodes == 0);
  }
  GIVEN("a budget too small to finish") {
    SolveBudget tiny;
    tiny.node_limit = 1;
    const auto cert = tpc_exact(family(FamilyKind::H3, {6}), tiny);
    REQUIRE(cert.status != CertificateStatus::Exact);
    REQUIRE(cert.lower <= 4);
    REQUIRE(cert.value >= 4);
    REQUIRE(is_total_proper_connected(cert.graph, cert.witness));
  }
  REQUIRE_THROWS_AS(tpc_exact(Graph(4, {{0, 1}, {2, 3}})), Error);
}

SCENARIO("The naive oracle") {
  REQUIRE(naive_oracle_tpc(family(FamilyKind::Cycle, {4})) == 3);
  REQUIRE(naive_oracle_tpc(family(FamilyKind::S4PlusE, {})) == 3);
  REQUIRE(naive_oracle_tpc(family(FamilyKind::Complete, {5})) == 1);
  REQUIRE_THROWS_AS(naive_oracle_tpc(family(FamilyKind::Complete, {6})), Error);
}

SCENARIO("Certificate JSON") {
  const auto cert = tpc_exact(family(FamilyKind::DoubleStar, {2, 3}));
  const Json j = certificate_to_json(cert);
  REQUIRE(j["tpc"] == 4);
  REQUIRE(j["status"] == "Exact");
  REQUIRE(j["lower_reason"] == "bound-match");
  const auto back = certificate_from_json(j);
  REQUIRE(back.graph == cert.graph);
  REQUIRE(back.witness == cert.witness);
  REQUIRE(back.value == cert.value);
  REQUIRE(back.pair_witnesses.size() == cert.pair_witnesses.size());
}

TEST_CASE("solver invariants") {
  for (const auto& p : testing::property_suites()) {
    if (p.module != "solver") continue;
    INFO(p.name);
    const auto failures = p.run();
    CAPTURE(failures);
    CHECK(failures.empty());
  }
}

}  // namespace
}  // namespace tpc
