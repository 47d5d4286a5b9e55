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

// tpc-lab: command-line front end over libtpclab.
//
// Exit codes: 0 success, 1 counterexample or failed check, 2 usage or
// input error, 3 timeout or inconclusive.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tpc/tpc_api.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(tpc_status s) {
  if (s != TPC_OK) throw UsageError(tpc_last_error());
}

struct Freer {
  void operator()(tpc_graph* g) const { tpc_graph_free(g); }
  void operator()(tpc_graph_list* l) const { tpc_graph_list_free(l); }
  void operator()(tpc_coloring* c) const { tpc_coloring_free(c); }
  void operator()(tpc_certificate* c) const { tpc_certificate_free(c); }
  void operator()(tpc_report* r) const { tpc_report_free(r); }
  void operator()(char* s) const { tpc_string_free(s); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

std::string take(char* s) {
  Owned<char> owned(s);
  return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A graph6 argument is either the string itself or a file holding it.
Owned<tpc_graph> load_graph(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::istringstream lines(read_file(arg));
    std::getline(lines, text);
  }
  tpc_graph* g = nullptr;
  check(tpc_graph_from_graph6(text.c_str(), &g));
  return Owned<tpc_graph>(g);
}

Owned<tpc_coloring> load_coloring(const tpc_graph* g, const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string json =
      first != std::string::npos && arg[first] == '{' ? arg : read_file(arg);
  tpc_coloring* c = nullptr;
  check(tpc_coloring_from_json(g, json.c_str(), &c));
  return Owned<tpc_coloring>(c);
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  check(tpc_write_file_atomic(output.c_str(), content.c_str()));
}

// "5", "4..7" or "4-7".
std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("invalid --n value '" + text + "'");
    return v;
  };
  for (const std::string sep : {"..", "-"}) {
    const auto pos = text.find(sep, 1);
    if (pos != std::string::npos) {
      return {to_int(text.substr(0, pos)), to_int(text.substr(pos + sep.size()))};
    }
  }
  const int n = to_int(text);
  return {n, n};
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("invalid --params '" + text + "'");
  }
  return out;
}

tpc_report_format parse_format(const std::string& name) {
  if (name == "json") return TPC_FORMAT_JSON;
  if (name == "csv") return TPC_FORMAT_CSV;
  if (name == "text") return TPC_FORMAT_TEXT;
  throw UsageError("--format must be json, csv or text");
}

int verdict_code(const tpc_report* r) {
  switch (tpc_report_verdict(r)) {
    case TPC_VERIFIED:
      return kOk;
    case TPC_COUNTEREXAMPLE:
      return kFailed;
    default:
      return kTimeout;
  }
}

struct Options {
  std::string graph6;
  std::string coloring;
  bool strong = false;
  std::string family;
  std::string params;
  std::string statement;
  std::string n;
  std::int64_t budget = 0;
  int jobs = 0;
  std::string input;
  std::string filter = "connected";
  std::string format = "json";
  std::string output;
  std::string report;
};

tpc_budget budget_of(const Options& o) {
  tpc_budget b;
  tpc_budget_default(&b);
  if (o.budget > 0) b.node_limit = o.budget;
  return b;
}

int jobs_of(const Options& o) { return o.jobs > 0 ? o.jobs : tpc_default_jobs(); }

int run_solve(const Options& o) {
  auto g = load_graph(o.graph6);
  const tpc_budget b = budget_of(o);
  tpc_certificate* raw = nullptr;
  check(tpc_solve(g.get(), &b, &raw));
  Owned<tpc_certificate> cert(raw);
  char* json = nullptr;
  check(tpc_certificate_to_json(cert.get(), &json));
  emit(o.output, take(json));
  return tpc_certificate_status_of(cert.get()) == TPC_CERT_EXACT ? kOk : kTimeout;
}

int run_check(const Options& o) {
  auto g = load_graph(o.graph6);
  auto c = load_coloring(g.get(), o.coloring);
  tpc_check_result r;
  check(tpc_check(g.get(), c.get(), o.strong ? 1 : 0, &r));
  const bool pass = r.fully_assigned && r.connected && (!o.strong || r.strong == 1);
  std::ostringstream out;
  out << "{\"pass\": " << (pass ? "true" : "false")
      << ", \"fully_assigned\": " << (r.fully_assigned ? "true" : "false")
      << ", \"connected\": " << (r.connected ? "true" : "false") << ", \"failing_pair\": ";
  if (r.failing_u >= 0) {
    out << '[' << r.failing_u << ", " << r.failing_v << ']';
  } else {
    out << "null";
  }
  if (o.strong) out << ", \"strong\": " << (r.strong == 1 ? "true" : "false");
  out << ", \"palette_size\": " << r.palette_size << "}\n";
  emit(o.output, out.str());
  return pass ? kOk : kFailed;
}

int run_color_family(const Options& o) {
  const auto params = parse_params(o.params);
  tpc_graph* graw = nullptr;
  tpc_coloring* craw = nullptr;
  check(tpc_color_family(o.family.c_str(), params.data(), params.size(), &graw, &craw));
  Owned<tpc_graph> g(graw);
  Owned<tpc_coloring> c(craw);
  char* g6 = nullptr;
  char* json = nullptr;
  check(tpc_graph_to_graph6(g.get(), &g6));
  const std::string graph6 = take(g6);
  check(tpc_coloring_to_json(g.get(), c.get(), &json));
  emit(o.output, "{\"graph6\": \"" + graph6 + "\", \"coloring\": " + take(json) + "}\n");
  return kOk;
}

int run_verify(const Options& o) {
  const auto [lo, hi] = parse_range(o.n);
  const tpc_budget b = budget_of(o);
  tpc_report* raw = nullptr;
  check(tpc_verify(o.statement.c_str(), lo, hi, &b, jobs_of(o), &raw));
  Owned<tpc_report> r(raw);
  char* text = nullptr;
  check(tpc_report_emit(r.get(), parse_format(o.format), &text));
  emit(o.output, take(text));
  return verdict_code(r.get());
}

int run_ng_scan(const Options& o) {
  const auto [lo, hi] = parse_range(o.n);
  if (lo != hi) throw UsageError("ng-scan takes a single --n");
  Owned<tpc_graph_list> source;
  if (!o.input.empty()) {
    tpc_graph_list* raw = nullptr;
    check(tpc_graph_list_read_graph6(o.input.c_str(), &raw));
    source.reset(raw);
  }
  const tpc_budget b = budget_of(o);
  tpc_report* raw = nullptr;
  check(tpc_ng_scan(lo, source.get(), &b, jobs_of(o), &raw));
  Owned<tpc_report> r(raw);
  char* rows = nullptr;
  check(tpc_report_rows_csv(r.get(), &rows));
  char* summary = nullptr;
  check(tpc_report_emit(r.get(), parse_format(o.format), &summary));
  const std::string report = take(summary);
  emit(o.output, take(rows));
  if (o.report.empty()) {
    std::cerr << report;
  } else {
    emit(o.report, report);
  }
  return verdict_code(r.get());
}

int run_enumerate(const Options& o) {
  const auto [lo, hi] = parse_range(o.n);
  tpc_filter filter;
  if (o.filter == "connected") {
    filter = TPC_FILTER_CONNECTED;
  } else if (o.filter == "coconnected") {
    filter = TPC_FILTER_COCONNECTED;
  } else {
    throw UsageError("--filter must be connected or coconnected");
  }
  std::string out;
  for (int n = lo; n <= hi; ++n) {
    tpc_graph_list* raw = nullptr;
    check(tpc_enumerate(n, filter, &raw));
    Owned<tpc_graph_list> list(raw);
    for (std::size_t i = 0; i < tpc_graph_list_size(list.get()); ++i) {
      char* g6 = nullptr;
      check(tpc_graph_to_graph6(tpc_graph_list_at(list.get(), i), &g6));
      out += take(g6) + '\n';
    }
  }
  emit(o.output, out);
  return kOk;
}

int run_complement(const Options& o) {
  auto g = load_graph(o.graph6);
  tpc_graph* raw = nullptr;
  check(tpc_graph_complement(g.get(), &raw));
  Owned<tpc_graph> h(raw);
  char* g6 = nullptr;
  check(tpc_graph_to_graph6(h.get(), &g6));
  emit(o.output, take(g6) + '\n');
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total-proper connection number laboratory"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(tpc_version()));
  Options o;

  auto* solve = app.add_subcommand("solve", "exact tpc with a certificate (JSON)");
  solve->add_option("--graph6", o.graph6, "graph6 string or file")->required();
  solve->add_option("--budget", o.budget, "search nodes per decision level")
      ->check(CLI::PositiveNumber);
  solve->add_option("--output", o.output, "output file (default stdout)");

  auto* chk = app.add_subcommand("check", "check a total coloring");
  chk->add_option("--graph6", o.graph6, "graph6 string or file")->required();
  chk->add_option("--coloring", o.coloring, "coloring JSON or file")->required();
  chk->add_flag("--strong", o.strong, "also test the strong property");
  chk->add_option("--output", o.output, "output file (default stdout)");

  auto* fam = app.add_subcommand("color-family", "named family with its coloring");
  fam->add_option("--family", o.family, "family name")->required();
  fam->add_option("--params", o.params, "comma separated integers");
  fam->add_option("--output", o.output, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "verify a statement over a range");
  ver->add_option("--statement", o.statement, "statement id")->required();
  ver->add_option("--n", o.n, "order or range a..b")->required();
  ver->add_option("--budget", o.budget, "search nodes per decision level")
      ->check(CLI::PositiveNumber);
  ver->add_option("--jobs", o.jobs, "worker threads (default TPC_LAB_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--format", o.format, "json, csv or text");
  ver->add_option("--output", o.output, "report file (default stdout)");

  auto* ng = app.add_subcommand("ng-scan", "sum of tpc over complementary pairs");
  ng->add_option("--n", o.n, "order")->required();
  ng->add_option("--input", o.input, "graph6 file instead of the built-in enumeration");
  ng->add_option("--budget", o.budget, "search nodes per decision level")
      ->check(CLI::PositiveNumber);
  ng->add_option("--jobs", o.jobs, "worker threads (default TPC_LAB_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  ng->add_option("--format", o.format, "report format: json, csv or text");
  ng->add_option("--output", o.output, "row CSV file (default stdout)");
  ng->add_option("--report", o.report, "report file (default stderr)");

  auto* en = app.add_subcommand("enumerate", "one graph6 line per isomorphism class");
  en->add_option("--n", o.n, "order or range a..b")->required();
  en->add_option("--filter", o.filter, "connected or coconnected");
  en->add_option("--output", o.output, "output file (default stdout)");

  auto* comp = app.add_subcommand("complement", "complement of a graph");
  comp->add_option("--graph6", o.graph6, "graph6 string or file")->required();
  comp->add_option("--output", o.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(o);
    if (*chk) return run_check(o);
    if (*fam) return run_color_family(o);
    if (*ver) return run_verify(o);
    if (*ng) return run_ng_scan(o);
    if (*en) return run_enumerate(o);
    if (*comp) return run_complement(o);
  } catch (const UsageError& e) {
    std::cerr << "tpc-lab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
