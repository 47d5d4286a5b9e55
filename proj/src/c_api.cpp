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

#include "tpc/tpc_api.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "tpc/canonical.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"
#include "tpc/graph.hpp"
#include "tpc/graph6.hpp"
#include "tpc/harness.hpp"
#include "tpc/json_io.hpp"
#include "tpc/solver.hpp"

struct tpc_graph {
  tpc::Graph g;
};

struct tpc_graph_list {
  std::vector<tpc_graph> graphs;
};

struct tpc_coloring {
  tpc::TotalColoring c;
};

struct tpc_certificate {
  tpc::TpcCertificate cert;
};

struct tpc_report {
  tpc::VerificationReport report;
  std::vector<tpc::NgRow> rows;
};

namespace {

thread_local std::string last_error;

tpc_status fail(tpc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

tpc_status status_of(tpc::ErrorCode code) {
  return static_cast<tpc_status>(static_cast<int>(code));
}

// Runs body, mapping exceptions to status codes.
template <class Body>
tpc_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return TPC_OK;
  } catch (const tpc::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TPC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TPC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw tpc::Error(tpc::ErrorCode::InvalidArgument, what);
}

tpc::SolveBudget to_budget(const tpc_budget* b) {
  tpc::SolveBudget out;
  if (!b) return out;
  require(b->node_limit > 0 && b->path_step_limit > 0 && b->prune_interval > 0,
          "budget limits must be positive");
  out.node_limit = b->node_limit;
  out.path_step_limit = b->path_step_limit;
  out.prune_interval = b->prune_interval;
  return out;
}

// Families without a dedicated construction.
tpc::TotalColoring generic_coloring(const tpc::Graph& g) {
  if (g.is_complete()) return tpc::TotalColoring(g, 1);
  if (g.is_tree() && g.order() >= 3) return tpc::color_tree(g);
  auto ham = tpc::find_hamiltonian_path(g);
  if (ham.status == tpc::SearchStatus::Found) return tpc::color_traceable(g, *ham.path);
  return tpc::tpc_exact(g).witness;
}

}  // namespace

extern "C" {

const char* tpc_version(void) { return "1.0.0"; }

const char* tpc_last_error(void) { return last_error.c_str(); }

void tpc_string_free(char* s) { std::free(s); }

void tpc_budget_default(tpc_budget* out) {
  if (!out) return;
  tpc::SolveBudget d;
  out->node_limit = d.node_limit;
  out->path_step_limit = d.path_step_limit;
  out->prune_interval = d.prune_interval;
}

tpc_status tpc_graph_from_graph6(const char* text, tpc_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new tpc_graph{tpc::from_graph6(text)};
  });
}

tpc_status tpc_graph_from_edges(int n, const int* edges, size_t m, tpc_graph** out) {
  return guarded([&] {
    require(out && (edges || m == 0), "null argument");
    require(n >= 0 && n <= tpc::kMaxOrder, "order out of range");
    std::vector<tpc::Edge> list;
    for (size_t i = 0; i < m; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new tpc_graph{tpc::Graph(n, list)};
  });
}

void tpc_graph_free(tpc_graph* g) { delete g; }

int tpc_graph_order(const tpc_graph* g) { return g ? g->g.order() : -1; }

int tpc_graph_size(const tpc_graph* g) { return g ? g->g.size() : -1; }

int tpc_graph_is_connected(const tpc_graph* g) { return g && tpc::is_connected(g->g) ? 1 : 0; }

tpc_status tpc_graph_to_graph6(const tpc_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup(tpc::to_graph6(g->g));
  });
}

tpc_status tpc_graph_complement(const tpc_graph* g, tpc_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new tpc_graph{tpc::complement(g->g)};
  });
}

int tpc_graph_isomorphic(const tpc_graph* a, const tpc_graph* b) {
  int result = -1;
  guarded([&] {
    require(a && b, "null argument");
    result = tpc::isomorphic(a->g, b->g) ? 1 : 0;
  });
  return result;
}

tpc_status tpc_enumerate(int n, tpc_filter filter, tpc_graph_list** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(n >= 1, "n must be positive");
    require(filter == TPC_FILTER_CONNECTED || filter == TPC_FILTER_COCONNECTED,
            "unknown filter");
    tpc::GraphFilter f;
    if (filter == TPC_FILTER_COCONNECTED) f = tpc::complement_connected;
    auto list = std::make_unique<tpc_graph_list>();
    for (auto& g : tpc::enumerate_connected_graphs(n, f)) list->graphs.push_back({std::move(g)});
    *out = list.release();
  });
}

tpc_status tpc_graph_list_read_graph6(const char* path, tpc_graph_list** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path);
    if (!in) throw tpc::Error(tpc::ErrorCode::Io, std::string("cannot read ") + path);
    auto list = std::make_unique<tpc_graph_list>();
    for (auto& g : tpc::read_graph6_stream(in)) list->graphs.push_back({std::move(g)});
    *out = list.release();
  });
}

size_t tpc_graph_list_size(const tpc_graph_list* list) { return list ? list->graphs.size() : 0; }

const tpc_graph* tpc_graph_list_at(const tpc_graph_list* list, size_t i) {
  if (!list || i >= list->graphs.size()) return nullptr;
  return &list->graphs[i];
}

void tpc_graph_list_free(tpc_graph_list* list) { delete list; }

tpc_status tpc_coloring_from_json(const tpc_graph* g, const char* json, tpc_coloring** out) {
  return guarded([&] {
    require(g && json && out, "null argument");
    tpc::Json j;
    try {
      j = tpc::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw tpc::Error(tpc::ErrorCode::MalformedColoring,
                       std::string("coloring JSON: ") + e.what());
    }
    *out = new tpc_coloring{tpc::coloring_from_json(g->g, j)};
  });
}

tpc_status tpc_coloring_to_json(const tpc_graph* g, const tpc_coloring* c, char** out) {
  return guarded([&] {
    require(g && c && out, "null argument");
    require(c->c.fits(g->g), "coloring does not fit the graph");
    *out = dup(tpc::coloring_to_json(g->g, c->c).dump());
  });
}

int tpc_coloring_palette_size(const tpc_coloring* c) { return c ? c->c.palette_size() : -1; }

void tpc_coloring_free(tpc_coloring* c) { delete c; }

tpc_status tpc_check(const tpc_graph* g, const tpc_coloring* c, int strong,
                     tpc_check_result* out) {
  return guarded([&] {
    require(g && c && out, "null argument");
    require(c->c.fits(g->g), "coloring does not fit the graph");
    auto report = tpc::check_total_proper_connected(g->g, c->c);
    tpc_check_result r{};
    r.fully_assigned = c->c.fully_assigned() ? 1 : 0;
    r.connected = report.connected ? 1 : 0;
    r.failing_u = report.failing_pair ? report.failing_pair->first : -1;
    r.failing_v = report.failing_pair ? report.failing_pair->second : -1;
    r.strong = -1;
    if (strong) {
      r.strong = r.fully_assigned && r.connected && tpc::has_strong_property(g->g, c->c) ? 1 : 0;
    }
    r.palette_size = c->c.palette_size();
    *out = r;
  });
}

tpc_status tpc_solve(const tpc_graph* g, const tpc_budget* budget, tpc_certificate** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new tpc_certificate{tpc::tpc_exact(g->g, to_budget(budget))};
  });
}

int tpc_certificate_value(const tpc_certificate* c) { return c ? c->cert.value : -1; }

int tpc_certificate_lower(const tpc_certificate* c) { return c ? c->cert.lower : -1; }

tpc_certificate_status tpc_certificate_status_of(const tpc_certificate* c) {
  if (!c) return TPC_CERT_TIMEOUT;
  switch (c->cert.status) {
    case tpc::CertificateStatus::Exact:
      return TPC_CERT_EXACT;
    case tpc::CertificateStatus::BoundsOnly:
      return TPC_CERT_BOUNDS_ONLY;
    default:
      return TPC_CERT_TIMEOUT;
  }
}

tpc_status tpc_certificate_to_json(const tpc_certificate* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup(tpc::certificate_to_json(c->cert).dump(2));
  });
}

tpc_status tpc_certificate_witness(const tpc_certificate* c, tpc_coloring** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new tpc_coloring{c->cert.witness};
  });
}

void tpc_certificate_free(tpc_certificate* c) { delete c; }

int tpc_decide(const tpc_graph* g, int k, const tpc_budget* budget, tpc_coloring** witness) {
  int result = -1;
  guarded([&] {
    require(g != nullptr, "null argument");
    require(k >= 1, "k must be positive");
    auto r = tpc::decide_k(g->g, k, to_budget(budget));
    switch (r.status) {
      case tpc::DecideStatus::Feasible:
        result = 1;
        if (witness) *witness = new tpc_coloring{*r.coloring};
        break;
      case tpc::DecideStatus::Infeasible:
        result = 0;
        break;
      case tpc::DecideStatus::Timeout:
        result = 2;
        break;
    }
  });
  return result;
}

tpc_status tpc_color_family(const char* name, const int* params, size_t count,
                            tpc_graph** graph, tpc_coloring** coloring) {
  return guarded([&] {
    require(name && graph && coloring && (params || count == 0), "null argument");
    auto spec = tpc::parse_family(name, std::vector<int>(params, params + count));
    tpc::ColoredGraph result;
    using tpc::FamilyKind;
    const int kind = static_cast<int>(spec.kind);
    if (spec.kind == FamilyKind::KstPlusV) {
      const auto side = spec.params[2] == 0 ? tpc::Side::U : tpc::Side::W;
      result = tpc::color_lemma1(spec.params[0], spec.params[1], {side, spec.params[3]});
    } else if (spec.kind == FamilyKind::HPrime) {
      result = tpc::color_h_prime(spec.params[0]);
    } else if (kind >= static_cast<int>(FamilyKind::H1) &&
               kind <= static_cast<int>(FamilyKind::H4) &&
               spec.params[0] >= tpc::lemma2_min_order(static_cast<tpc::UnicyclicVariant>(
                                     kind - static_cast<int>(FamilyKind::H1)))) {
      result = tpc::color_lemma2(
          static_cast<tpc::UnicyclicVariant>(kind - static_cast<int>(FamilyKind::H1)),
          spec.params[0]);
    } else {
      result.graph = tpc::build_family(spec);
      result.coloring = generic_coloring(result.graph);
    }
    auto g = std::make_unique<tpc_graph>(tpc_graph{std::move(result.graph)});
    *coloring = new tpc_coloring{std::move(result.coloring)};
    *graph = g.release();
  });
}

tpc_status tpc_verify(const char* statement, int n_min, int n_max, const tpc_budget* budget,
                      int jobs, tpc_report** out) {
  return guarded([&] {
    require(statement && out, "null argument");
    require(jobs >= 1, "jobs must be positive");
    tpc::TheoremCase c{tpc::parse_statement(statement), n_min, n_max, to_budget(budget)};
    c.jobs = jobs;
    *out = new tpc_report{tpc::verify_statement(c), {}};
  });
}

tpc_status tpc_ng_scan(int n, const tpc_graph_list* source, const tpc_budget* budget, int jobs,
                       tpc_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(jobs >= 1, "jobs must be positive");
    std::optional<std::vector<tpc::Graph>> graphs;
    if (source) {
      graphs.emplace();
      for (const auto& g : source->graphs) graphs->push_back(g.g);
    }
    auto scan = tpc::ng_scan(n, graphs, to_budget(budget), jobs);
    *out = new tpc_report{std::move(scan.report), std::move(scan.rows)};
  });
}

tpc_verdict tpc_report_verdict(const tpc_report* r) {
  if (!r || !r->report.counterexamples.empty()) return TPC_COUNTEREXAMPLE;
  return r->report.timeouts.empty() ? TPC_VERIFIED : TPC_INCONCLUSIVE;
}

int tpc_report_examined(const tpc_report* r) { return r ? r->report.examined : -1; }

int tpc_report_passes(const tpc_report* r) { return r ? r->report.passes : -1; }

int tpc_report_counterexamples(const tpc_report* r) {
  return r ? static_cast<int>(r->report.counterexamples.size()) : -1;
}

int tpc_report_timeouts(const tpc_report* r) {
  return r ? static_cast<int>(r->report.timeouts.size()) : -1;
}

tpc_status tpc_report_emit(const tpc_report* r, tpc_report_format format, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(format >= TPC_FORMAT_JSON && format <= TPC_FORMAT_TEXT, "unknown format");
    *out = dup(tpc::emit_report(r->report, static_cast<tpc::ReportFormat>(format)));
  });
}

tpc_status tpc_report_rows_csv(const tpc_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(r->rows.empty() ? std::string() : tpc::ng_rows_csv(r->rows));
  });
}

void tpc_report_free(tpc_report* r) { delete r; }

tpc_status tpc_write_file_atomic(const char* path, const char* content) {
  return guarded([&] {
    require(path && content, "null argument");
    tpc::write_file_atomic(path, content);
  });
}

int tpc_default_jobs(void) { return tpc::default_jobs(); }

}  // extern "C"
