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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/properties.hpp"
#include "tpc/canonical.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"
#include "tpc/graph6.hpp"
#include "tpc/harness.hpp"
#include "tpc/json_io.hpp"

namespace tpc {
namespace {

VerificationReport run(Statement s, int lo, int hi) {
  TheoremCase c{s, lo, hi, {}};
  auto report = verify_statement(c);
  REQUIRE(report.consistent());
  return report;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

SCENARIO("Statement ids") {
  for (Statement s : all_statements()) REQUIRE(parse_statement(statement_id(s)) == s);
  REQUIRE(all_statements().size() == 14);
  REQUIRE_THROWS_AS(parse_statement("thm7"), Error);
}

SCENARIO("Theorem 4 reports") {
  GIVEN("n = 4") {
    const auto r = run(Statement::Thm4, 4, 4);
    REQUIRE(r.examined == 6);
    REQUIRE(r.passes == 6);
    REQUIRE(r.counterexamples.empty());
  }
  GIVEN("n = 5") {
    const auto r = run(Statement::Thm4, 5, 5);
    REQUIRE(r.examined == 21);
    REQUIRE(r.verified());
    THEN("T(2,3) is the only graph with tpc = 4") {
      int hits = 0;
      for (const Graph& g : enumerate_connected_graphs(5)) {
        if (tpc_exact(g).value == 4) {
          ++hits;
          REQUIRE(isomorphic(g, build_family({FamilyKind::DoubleStar, {2, 3}})));
        }
      }
      REQUIRE(hits == 1);
    }
  }
  GIVEN("a doctored solver value") {
    TheoremCase c{Statement::Thm4, 4, 4, {}};
    c.tamper = [](TpcCertificate& cert) {
      if (cert.graph.is_complete()) cert.value = cert.lower = 3;
    };
    const auto r = verify_statement(c);
    THEN("the complete graph is reported with its certificate") {
      REQUIRE(r.consistent());
      REQUIRE(r.counterexamples.size() == 1);
      REQUIRE(r.counterexamples[0].graph6 == to_graph6(build_family({FamilyKind::Complete, {4}})));
      REQUIRE(r.counterexamples[0].certificate);
      const auto csv = lines(emit_report(r, ReportFormat::Csv));
      REQUIRE(csv.size() == 3);
      REQUIRE(csv[2].rfind("counterexample,thm4,", 0) == 0);
      REQUIRE(csv[2].find("certificate=") != std::string::npos);
      const Json j = Json::parse(emit_report(r, ReportFormat::Json));
      REQUIRE(j["counterexamples"][0]["certificate"]["tpc"] == 3);
    }
  }
}

SCENARIO("Report formats") {
  const auto r = run(Statement::Thm1, 3, 6);
  REQUIRE(r.verified());
  const auto csv = lines(emit_report(r, ReportFormat::Csv));
  REQUIRE(csv.size() == 2);
  REQUIRE(csv[0] == "kind,statement,n_min,n_max,graph6,examined,passes,counterexamples,"
                    "timeouts,details");
  REQUIRE(csv[1].rfind("summary,thm1,3,6,,", 0) == 0);
  const Json j = Json::parse(emit_report(r, ReportFormat::Json));
  REQUIRE(j["examined"] == r.examined);
  REQUIRE(j["counterexamples"].empty());
  REQUIRE(emit_report(r, ReportFormat::Text).find("VERIFIED") != std::string::npos);
  REQUIRE_THROWS_AS(parse_report_format("xml"), Error);
}

SCENARIO("Small statements") {
  REQUIRE(run(Statement::Lemma3, 5, 5).verified());
  REQUIRE(run(Statement::Thm6, 4, 4).verified());
  REQUIRE(run(Statement::Prop3, 3, 6).verified());
  REQUIRE(run(Statement::Cor1, 3, 6).verified());
  REQUIRE(run(Statement::Thm2, 2, 4).verified());
  REQUIRE(run(Statement::Lemma2, 5, 7).verified());
  REQUIRE_THROWS_AS(run(Statement::Prop1, 2, 9), Error);
  REQUIRE_THROWS_AS(run(Statement::Lemma3, 4, 6), Error);
  REQUIRE_THROWS_AS(run(Statement::Thm5, 4, 6), Error);
}

SCENARIO("Nordhaus-Gaddum scans") {
  GIVEN("n = 5") {
    const auto scan = ng_scan(5, std::nullopt, {});
    REQUIRE(scan.report.verified());
    const Graph t23 = build_family({FamilyKind::DoubleStar, {2, 3}});
    int max_sum = 0;
    for (const auto& row : scan.rows) max_sum = std::max(max_sum, row.sum);
    REQUIRE(max_sum == 7);
    for (const auto& row : scan.rows) {
      const Graph g = from_graph6(row.graph6);
      const bool t = isomorphic(g, t23) || isomorphic(complement(g), t23);
      REQUIRE((row.sum == 7) == t);
    }
  }
  GIVEN("n = 6") {
    const auto scan = ng_scan(6, std::nullopt, {});
    REQUIRE(scan.report.verified());
    const Graph t24 = build_family({FamilyKind::DoubleStar, {2, 4}});
    for (const auto& row : scan.rows) {
      const Graph g = from_graph6(row.graph6);
      const bool t = isomorphic(g, t24) || isomorphic(complement(g), t24);
      REQUIRE(row.sum <= 8);
      REQUIRE((row.sum == 8) == t);
    }
    THEN("the Theorem6 graph has sum 6") {
      const Graph g = build_family({FamilyKind::Theorem6, {6}});
      REQUIRE(tpc_exact(g).value + tpc_exact(complement(g)).value == 6);
    }
    THEN("rows do not depend on the worker count") {
      const auto parallel = ng_scan(6, std::nullopt, {}, 3);
      REQUIRE(ng_rows_csv(parallel.rows) == ng_rows_csv(scan.rows));
    }
  }
  GIVEN("an input list with repeats and other orders") {
    std::vector<Graph> source{build_family({FamilyKind::Path, {5}}),
                              complement(build_family({FamilyKind::Path, {5}})),
                              build_family({FamilyKind::Path, {4}}),
                              build_family({FamilyKind::Cycle, {5}})};
    const auto scan = ng_scan(5, source, {});
    THEN("each complementary class appears once") {
      REQUIRE(scan.rows.size() == 2);
      REQUIRE(ng_rows_csv(scan.rows).rfind("graph6,tpc,tpc_complement,sum,status\n", 0) == 0);
    }
  }
  REQUIRE_THROWS_AS(ng_scan(3, std::nullopt, {}), Error);
}

SCENARIO("File output") {
  const auto dir = std::filesystem::temp_directory_path() / "tpc_lab_harness_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  write_file_atomic(path, "hello\n");
  std::ifstream in(path);
  std::string text;
  std::getline(in, text);
  REQUIRE(text == "hello");
  REQUIRE_THROWS_AS(write_file_atomic((dir / "missing" / "x.txt").string(), "x"), Error);
  REQUIRE_FALSE(std::filesystem::exists(dir / "missing"));
  std::filesystem::remove_all(dir);
}

SCENARIO("Worker count from the environment") {
  ::setenv("TPC_LAB_JOBS", "4", 1);
  REQUIRE(default_jobs() == 4);
  ::setenv("TPC_LAB_JOBS", "zero", 1);
  REQUIRE(default_jobs() == 1);
  ::unsetenv("TPC_LAB_JOBS");
  REQUIRE(default_jobs() == 1);
}

TEST_CASE("harness invariants") {
  for (const auto& p : testing::property_suites()) {
    if (p.module != "harness") continue;
    INFO(p.name);
    const auto failures = p.run();
    CAPTURE(failures);
    CHECK(failures.empty());
  }
}

}  // namespace
}  // namespace tpc
