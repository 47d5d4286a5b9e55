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

// Runs the tpc-lab executable and inspects exit codes and outputs.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#ifndef TPC_LAB_EXECUTABLE
#error "TPC_LAB_EXECUTABLE must name the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

class Sandbox {
 public:
  Sandbox() : dir_(fs::temp_directory_path() / ("tpc_lab_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  Run run(const std::string& args) const {
    const auto out = path("stdout.txt");
    const auto err = path("stderr.txt");
    const std::string cmd = std::string("'") + TPC_LAB_EXECUTABLE + "' " + args + " >'" +
                            out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read(out), read(err)};
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name)) << content;
  }

 private:
  fs::path dir_;
};

SCENARIO("solve") {
  Sandbox box;
  const Run r = box.run("solve --graph6 Bw");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["tpc"] == 1);
  REQUIRE(j["status"] == "Exact");
  GIVEN("its witness fed back through check") {
    box.write("witness.json", j["witness"].dump());
    const Run c = box.run("check --graph6 Bw --coloring '" + box.path("witness.json").string() +
                          "'");
    REQUIRE(c.code == 0);
  }
  GIVEN("a graph6 file and an output path") {
    box.write("g.g6", "Ch\n");
    const Run w = box.run("solve --graph6 '" + box.path("g.g6").string() + "' --output '" +
                          box.path("cert.json").string() + "'");
    REQUIRE(w.code == 0);
    const auto cert = nlohmann::json::parse(Sandbox::read(box.path("cert.json")));
    box.write("w.json", cert["witness"].dump());
    REQUIRE(box.run("check --graph6 Ch --coloring '" + box.path("w.json").string() + "'").code ==
            0);
  }
  GIVEN("a one-node budget on a graph that needs search") {
    const Run t = box.run("solve --graph6 'E{`?' --budget 1");
    REQUIRE(t.code == 3);
    REQUIRE(nlohmann::json::parse(t.out)["status"] != "Exact");
  }
}

SCENARIO("check") {
  Sandbox box;
  const Run r = box.run(
      R"(check --graph6 Bg --coloring '{"n":3,"vertex_colors":[1,2,1],"edge_colors":[[0,1,1],[1,2,2]]}')");
  REQUIRE(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["pass"] == false);
  REQUIRE(j["failing_pair"] == nlohmann::json::array({0, 2}));
  const Run s = box.run(
      R"(check --strong --graph6 Bw --coloring '{"n":3,"vertex_colors":[1,1,1],"edge_colors":[[0,1,1],[0,2,1],[1,2,1]]}')");
  REQUIRE(s.code == 1);
  REQUIRE(nlohmann::json::parse(s.out)["strong"] == false);
}

SCENARIO("verify") {
  Sandbox box;
  const Run r = box.run("verify --statement thm6 --n 4");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["counterexamples"].empty());
  REQUIRE(j["examined"] == j["passes"]);
  const Run csv = box.run("verify --statement thm4 --n 3..5 --format csv --jobs 2");
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.rfind("kind,statement,", 0) == 0);
}

SCENARIO("ng-scan") {
  Sandbox box;
  const Run r = box.run("ng-scan --n 5 --format text");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.rfind("graph6,tpc,tpc_complement,sum,status\n", 0) == 0);
  REQUIRE(r.err.find("VERIFIED") != std::string::npos);
  box.write("in.g6", "DhC\nD]w\n");
  const Run f = box.run("ng-scan --n 5 --input '" + box.path("in.g6").string() + "'");
  REQUIRE(f.code == 0);
}

SCENARIO("enumerate and complement") {
  Sandbox box;
  const Run r = box.run("enumerate --n 4");
  REQUIRE(r.code == 0);
  REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  const Run co = box.run("enumerate --n 5 --filter coconnected");
  REQUIRE(std::count(co.out.begin(), co.out.end(), '\n') == 8);
  const Run c = box.run("complement --graph6 Bw");
  REQUIRE(c.code == 0);
  REQUIRE(c.out == "B?\n");
}

SCENARIO("color-family") {
  Sandbox box;
  const Run r = box.run("color-family --family kst-plus-v --params 3,2,1,1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  box.write("c.json", j["coloring"].dump());
  REQUIRE(box.run("check --graph6 '" + j["graph6"].get<std::string>() + "' --coloring '" +
                  box.path("c.json").string() + "'")
              .code == 0);
}

SCENARIO("usage errors") {
  Sandbox box;
  const Run g6 = box.run("solve --graph6 'B!'");
  const Run fam = box.run("color-family --family h1 --params 2");
  const Run st = box.run("verify --statement thm9 --n 4");
  REQUIRE(g6.code == 2);
  REQUIRE(fam.code == 2);
  REQUIRE(st.code == 2);
  REQUIRE(g6.err != fam.err);
  REQUIRE(fam.err != st.err);
  REQUIRE(box.run("").code == 2);
  REQUIRE(box.run("solve").code == 2);
  REQUIRE(box.run("verify --statement thm4 --n x").code == 2);
  REQUIRE(box.run("enumerate --n 4 --filter trees").code == 2);
  GIVEN("a failing run with an output path") {
    const auto out = box.path("never.json");
    REQUIRE(box.run("solve --graph6 'B!' --output '" + out.string() + "'").code == 2);
    REQUIRE_FALSE(fs::exists(out));
  }
}

}  // namespace
