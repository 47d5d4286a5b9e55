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
#include "tpc/canonical.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"
#include "tpc/solver.hpp"

namespace tpc {
namespace {

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.neighbours(e.u) & g.neighbours(e.v)) return true;
  }
  return false;
}

int tpc_of(const Graph& g) {
  const auto cert = tpc_exact(g);
  REQUIRE(cert.status == CertificateStatus::Exact);
  return cert.value;
}

SCENARIO("Family construction") {
  GIVEN("DoubleStar(2,2)") {
    REQUIRE(isomorphic(build_family({FamilyKind::DoubleStar, {2, 2}}),
                       build_family({FamilyKind::Path, {4}})));
  }
  GIVEN("H1 at n = 6") {
    const Graph h = build_family({FamilyKind::H1, {6}});
    REQUIRE(h.order() == 6);
    REQUIRE(h.size() == 6);
    REQUIRE(bridges(h).size() == 3);
    REQUIRE(has_triangle(h));
  }
  GIVEN("Theorem6(9)") {
    const Graph g = build_family({FamilyKind::Theorem6, {9}});
    THEN("v has the 4 vertices of U, which are independent, and W is a 4-clique") {
      REQUIRE(g.order() == 9);
      REQUIRE(g.size() == 18);
      REQUIRE(g.neighbours(0) == 0b11110u);
      for (Vertex a = 1; a <= 4; ++a) {
        for (Vertex b = a + 1; b <= 4; ++b) REQUIRE_FALSE(g.adjacent(a, b));
      }
      for (Vertex a = 5; a <= 8; ++a) {
        for (Vertex b = a + 1; b <= 8; ++b) REQUIRE(g.adjacent(a, b));
      }
      // u_i ~ w_i, w_{i+1} with subscripts mod 4.
      REQUIRE(g.adjacent(4, 8));
      REQUIRE(g.adjacent(4, 5));
    }
  }
  GIVEN("H-family structure") {
    const Graph h2 = build_family({FamilyKind::H2, {7}});
    const Graph h3 = build_family({FamilyKind::H3, {7}});
    const Graph h4 = build_family({FamilyKind::H4, {7}});
    REQUIRE(h2.size() == 7);
    REQUIRE(h3.size() == 7);
    REQUIRE(h4.size() == 7);
    REQUIRE(has_triangle(h2));
    REQUIRE(has_triangle(h3));
    REQUIRE_FALSE(has_triangle(h4));
    REQUIRE(h2.degree(0) == 5);
    REQUIRE(h3.degree(0) == 5);
    REQUIRE(h3.degree(1) == 3);
    REQUIRE(h4.degree(0) == 5);
  }
  GIVEN("invalid parameters") {
    REQUIRE_THROWS_AS(build_family({FamilyKind::DoubleStar, {1, 3}}), Error);
    REQUIRE_THROWS_AS(build_family({FamilyKind::H1, {4}}), Error);
    REQUIRE_THROWS_AS(build_family({FamilyKind::Theorem6, {3}}), Error);
    REQUIRE_THROWS_AS(parse_family("petersen", {}), Error);
    REQUIRE_THROWS_AS(parse_family("kst", {3}), Error);
  }
  GIVEN("CLI names") {
    std::vector<std::string> names;
    for (int k = 0; k <= static_cast<int>(FamilyKind::Theorem6); ++k) {
      names.push_back(family_name(static_cast<FamilyKind>(k)));
    }
    REQUIRE(names == std::vector<std::string>{"path", "cycle", "star", "complete", "kst",
                                              "double-star", "s4e", "c4e", "h1", "h2", "h3",
                                              "h4", "kst-plus-v", "h-prime", "thm6"});
    REQUIRE(parse_family("double-star", {2, 3}).kind == FamilyKind::DoubleStar);
  }
}

SCENARIO("Tree colorings") {
  const Graph p4 = build_family({FamilyKind::Path, {4}});
  const Graph s5 = build_family({FamilyKind::Star, {5}});
  const Graph t24 = build_family({FamilyKind::DoubleStar, {2, 4}});
  REQUIRE(color_tree(p4).palette_size() == 3);
  REQUIRE(is_total_proper_connected(p4, color_tree(p4)));
  REQUIRE(color_tree(s5).palette_size() == 5);
  REQUIRE(is_total_proper_connected(s5, color_tree(s5)));
  REQUIRE(color_tree(t24).palette_size() == 5);
  REQUIRE(is_total_proper_connected(t24, color_tree(t24)));
  REQUIRE(tpc_of(t24) == 5);
  REQUIRE_THROWS_AS(color_tree(build_family({FamilyKind::Cycle, {4}})), Error);
}

SCENARIO("Traceable colorings") {
  for (const Graph& g : {build_family({FamilyKind::Cycle, {5}}),
                         build_family({FamilyKind::Path, {6}}),
                         build_family({FamilyKind::C4PlusE, {}})}) {
    const auto ham = find_hamiltonian_path(g);
    REQUIRE(ham.status == SearchStatus::Found);
    const auto c = color_traceable(g, *ham.path);
    REQUIRE(c.palette_size() == 3);
    REQUIRE(is_total_proper_connected(g, c));
  }
  REQUIRE(tpc_of(build_family({FamilyKind::C4PlusE, {}})) == 3);
  REQUIRE(tpc_of(build_family({FamilyKind::Path, {6}})) == 3);
  const Graph p4 = build_family({FamilyKind::Path, {4}});
  REQUIRE_THROWS_AS(color_traceable(p4, PathWitness{{0, 1, 2}}), Error);
}

SCENARIO("Lemma 1 colorings") {
  GIVEN("s = 3, t = 2, v on W") {
    const auto [g, c] = color_lemma1(3, 2, {Side::W, 1});
    REQUIRE(c.palette_size() <= 3);
    REQUIRE(is_total_proper_connected(g, c));
    REQUIRE(c.vertex_colors[3] == 1);
    REQUIRE(c.edge(g, 0, 4) == 1);
    REQUIRE(c.vertex_colors[4] == 2);
    REQUIRE(c.edge(g, 0, 3) == 2);
  }
  GIVEN("s = 4, t = 3, v on u4") {
    const auto [g, c] = color_lemma1(4, 3, {Side::U, 4});
    REQUIRE(g.adjacent(3, 7));
    REQUIRE(c.palette_size() <= 3);
    REQUIRE(is_total_proper_connected(g, c));
  }
  GIVEN("s = t = 3") {
    const Graph k33 = build_family({FamilyKind::CompleteBipartite, {3, 3}});
    REQUIRE(find_hamiltonian_path(k33).status == SearchStatus::Found);
    REQUIRE(tpc_of(k33) == 3);
    const auto [g, c] = color_lemma1(3, 3, {Side::W, 2});
    REQUIRE(c.palette_size() <= 3);
    REQUIRE(is_total_proper_connected(g, c));
  }
  GIVEN("H'") {
    const auto [g, c] = color_h_prime(4);
    REQUIRE(g.order() == 8);
    REQUIRE(g.adjacent(6, 4));
    REQUIRE(g.adjacent(7, 5));
    REQUIRE(c.vertex_colors[7] == 3);
    REQUIRE(c.edge(g, 5, 7) == 3);
    REQUIRE(is_total_proper_connected(g, c));
  }
  REQUIRE_THROWS_AS(color_lemma1(2, 3, {Side::U, 1}), Error);
  REQUIRE_THROWS_AS(color_lemma1(3, 2, {Side::U, 4}), Error);
}

SCENARIO("Lemma 2 colorings") {
  GIVEN("H1 at n = 6") {
    const auto [g, c] = color_lemma2(UnicyclicVariant::H1, 6);
    REQUIRE(c.palette_size() == 4);
    REQUIRE(is_total_proper_connected(g, c));
    REQUIRE(tpc_of(g) == 4);
  }
  GIVEN("H2 at n = 7") {
    const auto [g, c] = color_lemma2(UnicyclicVariant::H2, 7);
    REQUIRE(c.palette_size() == 4);
    REQUIRE(is_total_proper_connected(g, c));
    REQUIRE(tpc_of(g) == 4);
  }
  GIVEN("H4 at n = 8") {
    const auto [g, c] = color_lemma2(UnicyclicVariant::H4, 8);
    REQUIRE(c.palette_size() == 5);
    REQUIRE(is_total_proper_connected(g, c));
    REQUIRE(tpc_of(g) == 5);
  }
  REQUIRE_THROWS_AS(color_lemma2(UnicyclicVariant::H3, 6), Error);
}

TEST_CASE("families invariants") {
  for (const auto& p : testing::property_suites()) {
    if (p.module != "families") continue;
    INFO(p.name);
    const auto failures = p.run();
    CAPTURE(failures);
    CHECK(failures.empty());
  }
}

}  // namespace
}  // namespace tpc
