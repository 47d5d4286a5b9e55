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

#include "tpc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "tpc/canonical.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"
#include "tpc/graph6.hpp"
#include "tpc/json_io.hpp"

namespace tpc {

namespace {

const std::vector<std::pair<Statement, std::string>>& statement_table() {
  static const std::vector<std::pair<Statement, std::string>> table = {
      {Statement::Prop1, "prop1"},
      {Statement::Prop2, "prop2"},
      {Statement::Prop3, "prop3"},
      {Statement::Thm1, "thm1"},
      {Statement::Cor1, "cor1"},
      {Statement::Thm2, "thm2"},
      {Statement::Thm3Consistency, "thm3-consistency"},
      {Statement::Cor2Consistency, "cor2-consistency"},
      {Statement::Lemma1, "lemma1"},
      {Statement::Lemma2, "lemma2"},
      {Statement::Lemma3, "lemma3"},
      {Statement::Thm4, "thm4"},
      {Statement::Thm5, "thm5"},
      {Statement::Thm6, "thm6"},
  };
  return table;
}

// Results land in input order whatever the worker count.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<Result> out(count);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

enum class Verdict { Pass, Fail, Gap };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string graph6;
  std::string details;
  std::optional<TpcCertificate> certificate;
};

Outcome pass(const Graph& g) { return {Verdict::Pass, to_graph6(g), {}, std::nullopt}; }
Outcome gap(const Graph& g, std::string why) {
  return {Verdict::Gap, to_graph6(g), std::move(why), std::nullopt};
}
Outcome fail(const Graph& g, std::string why,
             std::optional<TpcCertificate> cert = std::nullopt) {
  return {Verdict::Fail, to_graph6(g), std::move(why), std::move(cert)};
}

void record(VerificationReport& report, Outcome o) {
  ++report.examined;
  switch (o.verdict) {
    case Verdict::Pass:
      ++report.passes;
      break;
    case Verdict::Fail:
      report.counterexamples.push_back({std::move(o.graph6), std::move(o.details),
                                        std::move(o.certificate)});
      break;
    case Verdict::Gap:
      report.timeouts.push_back(std::move(o.graph6));
      break;
  }
}

bool exact(const TpcCertificate& c) { return c.status == CertificateStatus::Exact; }

std::string describe(const TpcCertificate& c) {
  if (exact(c)) return "tpc=" + std::to_string(c.value);
  return "tpc in [" + std::to_string(c.lower) + "," + std::to_string(c.value) + "] (" +
         to_string(c.status) + ")";
}

class Runner {
 public:
  explicit Runner(const TheoremCase& c) : case_(c) {}

  TpcCertificate solve(const Graph& g) const {
    TpcCertificate cert = tpc_exact(g, case_.budget);
    if (case_.tamper) case_.tamper(cert);
    return cert;
  }

  template <class Fn>
  void run_all(VerificationReport& report, const std::vector<Graph>& graphs, Fn check) const {
    auto outcomes = parallel_map<Outcome>(graphs.size(), case_.jobs,
                                          [&](std::size_t i) { return check(graphs[i]); });
    for (auto& o : outcomes) record(report, std::move(o));
  }

  std::vector<Graph> connected(const GraphFilter& filter = {}) const {
    std::vector<Graph> out;
    for (int n = case_.n_min; n <= case_.n_max; ++n) {
      auto part = enumerate_connected_graphs(n, filter);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  const TheoremCase& c() const { return case_; }

 private:
  const TheoremCase& case_;
};

void require_min(const TheoremCase& c, int lowest) {
  if (c.n_min < lowest || c.n_min > c.n_max) {
    throw Error(ErrorCode::InvalidArgument,
                statement_id(c.statement) + " needs a range with " +
                    std::to_string(lowest) + " <= n_min <= n_max");
  }
}

void require_enumerable(const TheoremCase& c) {
  if (c.n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::SizeLimit,
                statement_id(c.statement) + ": built-in enumeration stops at n = " +
                    std::to_string(kMaxEnumerationOrder));
  }
}

bool is_double_star_2(const Graph& g) {
  // T(2, n-2) is the only tree on n >= 4 vertices with maximum degree n-2.
  return g.order() >= 4 && g.is_tree() && g.max_degree() == g.order() - 2;
}

Graph random_connected_spanning_subgraph(const Graph& g, std::mt19937_64& rng) {
  Graph h = g;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& e : edges) {
    if (rng() % 2) continue;
    Graph smaller = h.without_edge(e.u, e.v);
    if (is_connected(smaller)) h = std::move(smaller);
  }
  return h;
}

// ---- individual statements --------------------------------------------

void verify_prop1(const Runner& r, VerificationReport& report) {
  r.run_all(report, r.connected(), [&](const Graph& g) {
    auto cert = r.solve(g);
    if (!exact(cert)) return gap(g, describe(cert));
    const bool ok = g.is_complete() ? cert.value == 1 : cert.value >= 3;
    return ok ? pass(g)
              : fail(g, describe(cert) + (g.is_complete() ? " on a complete graph"
                                                          : " on a noncomplete graph"),
                     cert);
  });
}

void verify_prop2(const Runner& r, VerificationReport& report) {
  const auto graphs = r.connected();
  if (graphs.empty()) return;
  std::mt19937_64 rng(r.c().seed);
  std::vector<std::pair<Graph, Graph>> pairs;
  for (int i = 0; i < r.c().samples; ++i) {
    const Graph& g = graphs[rng() % graphs.size()];
    pairs.emplace_back(g, random_connected_spanning_subgraph(g, rng));
  }
  auto outcomes = parallel_map<Outcome>(pairs.size(), r.c().jobs, [&](std::size_t i) {
    const auto& [g, h] = pairs[i];
    if (g.order() < 2) return pass(g);
    auto cg = r.solve(g);
    auto ch = r.solve(h);
    // tpc(g) <= cg.value and tpc(h) >= ch.lower; a violation needs cg.lower > ch.value.
    if (cg.lower > ch.value) {
      return fail(g, "tpc(G)=" + describe(cg) + " exceeds tpc(H)=" + describe(ch) +
                         " for spanning subgraph H=" + to_graph6(h),
                  cg);
    }
    if (cg.value <= ch.lower) return pass(g);
    return gap(g, "inconclusive intervals");
  });
  for (auto& o : outcomes) record(report, std::move(o));
}

void verify_prop3(const Runner& r, VerificationReport& report) {
  r.run_all(report, r.connected([](const Graph& g) {
              return g.order() >= 3 && !bridges(g).empty();
            }),
            [&](const Graph& g) {
              const int b = max_bridge_degree(g);
              auto res = decide_k(g, b, r.c().budget);
              if (res.status == DecideStatus::Timeout) return gap(g, "decide_k timeout");
              if (res.status == DecideStatus::Feasible) {
                TpcCertificate cert;
                cert.graph = g;
                cert.value = b;
                cert.witness = *res.coloring;
                cert.pair_witnesses = check_total_proper_connected(g, cert.witness).witnesses;
                cert.status = CertificateStatus::BoundsOnly;
                return fail(g, "a " + std::to_string(b) + "-coloring exists with b=" +
                                   std::to_string(b),
                            cert);
              }
              return pass(g);
            });
}

void verify_thm1(const Runner& r, VerificationReport& report) {
  std::vector<Graph> trees;
  for (int n = r.c().n_min; n <= r.c().n_max; ++n) {
    auto part = enumerate_trees(n);
    trees.insert(trees.end(), part.begin(), part.end());
  }
  r.run_all(report, trees,
            [&](const Graph& g) {
              auto cert = r.solve(g);
              const int expected = g.max_degree() + 1;
              if (!exact(cert) || cert.value != expected) {
                return fail(g, describe(cert) + ", expected " + std::to_string(expected), cert);
              }
              if (cert.nodes != 0) return fail(g, "needed search beyond the bounds", cert);
              return pass(g);
            });
}

void verify_cor1(const Runner& r, VerificationReport& report) {
  std::vector<Graph> traceable;
  for (const Graph& g : r.connected()) {
    if (g.is_complete()) continue;
    auto ham = find_hamiltonian_path(g, r.c().budget.path_step_limit);
    if (ham.status != SearchStatus::NoneExists) traceable.push_back(g);
  }
  r.run_all(report, traceable, [&](const Graph& g) {
    auto ham = find_hamiltonian_path(g, r.c().budget.path_step_limit);
    if (ham.status == SearchStatus::BudgetExceeded) return gap(g, "Hamiltonian path budget");
    auto c = color_traceable(g, *ham.path);
    if (c.palette_size() > 3 || !is_total_proper_connected(g, c)) {
      return fail(g, "path coloring is not total-proper connecting");
    }
    auto two = decide_k(g, 2, r.c().budget);
    if (two.status == DecideStatus::Timeout) return gap(g, "decide_k(2) timeout");
    if (two.status == DecideStatus::Feasible) return fail(g, "a 2-coloring exists");
    return pass(g);
  });
}

void verify_thm2(const Runner& r, VerificationReport& report) {
  std::vector<Graph> graphs;
  for (int s = r.c().n_min; s <= r.c().n_max; ++s) {
    for (int t = 2; t <= s; ++t) {
      graphs.push_back(build_family({FamilyKind::CompleteBipartite, {s, t}}));
    }
  }
  r.run_all(report, graphs, [&](const Graph& g) {
    auto cert = r.solve(g);
    if (!exact(cert)) return gap(g, describe(cert));
    return cert.value == 3 ? pass(g) : fail(g, describe(cert) + ", expected 3", cert);
  });
}

void verify_thm3(const Runner& r, VerificationReport& report) {
  r.run_all(report, r.connected(is_two_connected), [&](const Graph& g) {
    auto cert = r.solve(g);
    if (cert.value <= 4) return pass(g);
    if (cert.lower > 4) return fail(g, describe(cert) + " exceeds 4", cert);
    return gap(g, describe(cert));
  });
}

std::vector<Graph> one_vertex_extensions(const Graph& g) {
  const int n = g.order();
  std::map<CanonicalCode, Graph> seen;
  std::vector<Edge> base(g.edges().begin(), g.edges().end());
  for (VertexSet subset = 1; subset < (VertexSet{1} << n); ++subset) {
    auto edges = base;
    for (VertexSet s = subset; s; s &= s - 1) edges.push_back({std::countr_zero(s), n});
    auto form = canonical_form(Graph(n + 1, edges));
    seen.try_emplace(std::move(form.code), std::move(form.graph));
  }
  std::vector<Graph> out;
  for (auto& [code, h] : seen) out.push_back(std::move(h));
  return out;
}

void verify_cor2(const Runner& r, VerificationReport& report) {
  std::vector<Graph> graphs;
  std::mt19937_64 rng(r.c().seed);
  for (int n = r.c().n_min; n <= r.c().n_max; ++n) {
    auto part = enumerate_connected_graphs(n, is_two_connected);
    if (n >= 6 && static_cast<int>(part.size()) > r.c().strong_samples) {
      std::shuffle(part.begin(), part.end(), rng);
      part.resize(r.c().strong_samples);
      std::sort(part.begin(), part.end(), [](const Graph& a, const Graph& b) {
        return to_graph6(a) < to_graph6(b);
      });
    }
    graphs.insert(graphs.end(), part.begin(), part.end());
  }
  r.run_all(report, graphs, [&](const Graph& g) {
    auto strong = find_strong_coloring(g, 4, r.c().budget);
    if (strong.status == DecideStatus::Timeout) return gap(g, "strong-property search timeout");
    if (strong.status == DecideStatus::Infeasible) {
      return fail(g, "no 4-coloring with the strong property");
    }
    for (const Graph& h : one_vertex_extensions(g)) {
      auto cert = r.solve(h);
      if (cert.lower > 4) {
        return fail(g, "extension " + to_graph6(h) + " has " + describe(cert), cert);
      }
      if (cert.value > 4) return gap(g, "extension " + to_graph6(h) + " " + describe(cert));
    }
    return pass(g);
  });
}

void verify_lemma1(const Runner& r, VerificationReport& report) {
  std::vector<ColoredGraph> cases;
  for (int s = r.c().n_min; s <= r.c().n_max; ++s) {
    for (int t = 2; t <= s; ++t) {
      for (int i = 1; i <= s; ++i) cases.push_back(color_lemma1(s, t, {Side::U, i}));
      for (int j = 1; j <= t; ++j) cases.push_back(color_lemma1(s, t, {Side::W, j}));
      if (t == 2) cases.push_back(color_h_prime(s));
    }
  }
  auto outcomes = parallel_map<Outcome>(cases.size(), r.c().jobs, [&](std::size_t i) {
    const auto& [g, c] = cases[i];
    if (c.palette_size() > 3) return fail(g, "uses " + std::to_string(c.palette_size()) + " colors");
    auto check = check_total_proper_connected(g, c);
    if (!check.connected) {
      return fail(g, "pair (" + std::to_string(check.failing_pair->first) + "," +
                         std::to_string(check.failing_pair->second) +
                         ") has no total-proper path");
    }
    return pass(g);
  });
  for (auto& o : outcomes) record(report, std::move(o));
}

int lemma2_expected(UnicyclicVariant v, int n) {
  switch (v) {
    case UnicyclicVariant::H1:
      return n - 2;
    case UnicyclicVariant::H2:
      return n == 5 ? n - 2 : n - 3;
    default:
      return n <= 6 ? n - 2 : n - 3;
  }
}

void verify_lemma2(const Runner& r, VerificationReport& report) {
  struct Item {
    UnicyclicVariant variant;
    int n;
  };
  std::vector<Item> items;
  for (int n = r.c().n_min; n <= r.c().n_max; ++n) {
    for (auto v : {UnicyclicVariant::H1, UnicyclicVariant::H2, UnicyclicVariant::H3,
                   UnicyclicVariant::H4}) {
      items.push_back({v, n});
    }
  }
  auto outcomes = parallel_map<Outcome>(items.size(), r.c().jobs, [&](std::size_t i) {
    const auto [variant, n] = items[i];
    const FamilyKind kind = static_cast<FamilyKind>(static_cast<int>(FamilyKind::H1) +
                                                    static_cast<int>(variant));
    Graph g = build_family({kind, {n}});
    const std::string name = family_name(kind) + "(" + std::to_string(n) + ")";
    const int expected = lemma2_expected(variant, n);
    auto cert = r.solve(g);
    if (!exact(cert)) return gap(g, name + " " + describe(cert));
    if (cert.value != expected) {
      return fail(g, name + " " + describe(cert) + ", expected " + std::to_string(expected),
                  cert);
    }
    if (n >= lemma2_min_order(variant)) {
      auto [graph, coloring] = color_lemma2(variant, n);
      const int palette = coloring.palette_size();
      const int want = variant == UnicyclicVariant::H1 ? n - 2 : n - 3;
      if (palette != want || !is_total_proper_connected(graph, coloring)) {
        return fail(g, name + " explicit coloring invalid (palette " +
                           std::to_string(palette) + ")");
      }
    }
    return pass(g);
  });
  for (auto& o : outcomes) record(report, std::move(o));
}

void verify_lemma3(const Runner& r, VerificationReport& report) {
  if (r.c().n_min != 5 || r.c().n_max != 5) {
    throw Error(ErrorCode::InvalidArgument, "lemma3 concerns n = 5 only");
  }
  const Graph t23 = build_family({FamilyKind::DoubleStar, {2, 3}});
  r.run_all(report, r.connected(complement_connected), [&](const Graph& g) {
    const Graph h = complement(g);
    auto cg = r.solve(g);
    auto ch = r.solve(h);
    if (!exact(cg) || !exact(ch)) return gap(g, describe(cg) + " / " + describe(ch));
    const int sum = cg.value + ch.value;
    const bool involved = isomorphic(g, t23) || isomorphic(h, t23);
    if (sum == (involved ? 7 : 6)) return pass(g);
    return fail(g, "sum " + std::to_string(sum) + (involved ? " with" : " without") +
                       " T(2,3)",
                cg);
  });
}

std::vector<Graph> thm4_family(int n) {
  std::vector<Graph> out;
  if (n >= 4) out.push_back(build_family({FamilyKind::DoubleStar, {2, n - 2}}));
  if (n == 4) {
    out.push_back(build_family({FamilyKind::Cycle, {4}}));
    out.push_back(build_family({FamilyKind::C4PlusE, {}}));
    out.push_back(build_family({FamilyKind::S4PlusE, {}}));
  }
  return out;
}

void verify_thm4(const Runner& r, VerificationReport& report) {
  require_min(r.c(), 3);
  r.run_all(report, r.connected(), [&](const Graph& g) {
    const int n = g.order();
    bool listed = false;
    for (const Graph& f : thm4_family(n)) listed |= isomorphic(g, f);
    auto cert = r.solve(g);
    // tpc lies in [lower, value].
    std::optional<bool> hits;
    if (exact(cert)) {
      hits = cert.value == n - 1;
    } else if (cert.value < n - 1 || cert.lower > n - 1) {
      hits = false;
    } else if (cert.lower == n - 1 && cert.value == n - 1) {
      hits = true;
    }
    if (!hits) return gap(g, describe(cert));
    if (*hits == listed) return pass(g);
    return fail(g, describe(cert) + (listed ? " but the graph is listed" : " but not listed"),
                cert);
  });
}

// ---- Nordhaus-Gaddum scans -----------------------------------------------

struct ScanItem {
  Graph g;
  NgRow row;
  TpcCertificate cert;
  TpcCertificate cert_complement;
};

std::vector<Graph> ng_graphs(int n, const std::optional<std::vector<Graph>>& source) {
  std::vector<Graph> candidates;
  if (source) {
    for (const Graph& g : *source) {
      if (g.order() == n && is_connected(g) && complement_connected(g)) candidates.push_back(g);
    }
    if (n > kMaxCanonicalOrder) return candidates;
  } else {
    if (n > kMaxEnumerationOrder) {
      throw Error(ErrorCode::SizeLimit, "ng-scan beyond n = 8 needs a graph6 input file");
    }
    candidates = enumerate_connected_graphs(n, complement_connected);
  }
  // One entry per {G, complement} class, keyed by the smaller canonical code.
  std::map<CanonicalCode, Graph> unique;
  for (const Graph& g : candidates) {
    auto form = canonical_form(g);
    auto other = canonical_form(complement(g));
    if (other.code < form.code) form = std::move(other);
    unique.try_emplace(std::move(form.code), std::move(form.graph));
  }
  std::vector<Graph> out;
  for (auto& [code, g] : unique) out.push_back(std::move(g));
  return out;
}

std::vector<ScanItem> scan(int n, const std::optional<std::vector<Graph>>& source,
                           const SolveBudget& budget, int jobs,
                           const std::function<void(TpcCertificate&)>& tamper) {
  const auto graphs = ng_graphs(n, source);
  return parallel_map<ScanItem>(graphs.size(), jobs, [&](std::size_t i) {
    ScanItem item;
    item.g = graphs[i];
    item.cert = tpc_exact(item.g, budget);
    item.cert_complement = tpc_exact(complement(item.g), budget);
    if (tamper) {
      tamper(item.cert);
      tamper(item.cert_complement);
    }
    item.row.graph6 = to_graph6(item.g);
    item.row.tpc = item.cert.value;
    item.row.tpc_complement = item.cert_complement.value;
    item.row.sum = item.row.tpc + item.row.tpc_complement;
    item.row.status = !exact(item.cert) ? to_string(item.cert.status)
                                        : to_string(item.cert_complement.status);
    return item;
  });
}

Outcome upper_check(const ScanItem& item, int n) {
  const Graph& g = item.g;
  const int lo = item.cert.lower + item.cert_complement.lower;
  const int hi = item.row.sum;
  const bool t2 = n >= 5 && (is_double_star_2(g) || is_double_star_2(complement(g)));
  const std::string range = lo == hi ? "sum " + std::to_string(hi)
                                     : "sum in [" + std::to_string(lo) + "," +
                                           std::to_string(hi) + "]";
  if (lo > n + 2) return fail(g, range + " > n+2", item.cert);
  if (n >= 5 && t2 && hi < n + 2) return fail(g, range + " with T(2,n-2) involved", item.cert);
  if (n >= 5 && !t2 && lo >= n + 2) return fail(g, range + " without T(2,n-2)", item.cert);
  const bool decided = n < 5 ? hi <= n + 2 : t2 ? lo == n + 2 : hi < n + 2;
  return decided ? pass(g) : gap(g, range);
}

Outcome lower_check(const ScanItem& item) {
  const Graph& g = item.g;
  const int lo = item.cert.lower + item.cert_complement.lower;
  if (lo >= 6) return pass(g);
  if (item.row.sum < 6) return fail(g, "sum " + std::to_string(item.row.sum) + " < 6", item.cert);
  return gap(g, "sum lower bound " + std::to_string(lo));
}

Outcome sharpness_check(int n, const SolveBudget& budget) {
  Graph g = build_family({FamilyKind::Theorem6, {n}});
  Graph h = complement(g);
  if (!is_connected(g) || !is_connected(h)) return fail(g, "construction not co-connected");
  auto pg = find_hamiltonian_path(g, budget.path_step_limit);
  auto ph = find_hamiltonian_path(h, budget.path_step_limit);
  if (pg.status != SearchStatus::Found || ph.status != SearchStatus::Found) {
    return pg.status == SearchStatus::BudgetExceeded || ph.status == SearchStatus::BudgetExceeded
               ? gap(g, "Hamiltonian path budget")
               : fail(g, "construction or its complement is not traceable");
  }
  auto cg = tpc_exact(g, budget);
  auto ch = tpc_exact(h, budget);
  if (!exact(cg) || !exact(ch)) return gap(g, describe(cg) + " / " + describe(ch));
  if (cg.value + ch.value != 6) {
    return fail(g, "construction sum " + std::to_string(cg.value + ch.value), cg);
  }
  return pass(g);
}

void verify_thm5(const Runner& r, VerificationReport& report) {
  require_min(r.c(), 5);
  for (int n = r.c().n_min; n <= r.c().n_max; ++n) {
    for (const auto& item : scan(n, std::nullopt, r.c().budget, r.c().jobs, r.c().tamper)) {
      record(report, upper_check(item, n));
    }
  }
}

void verify_thm6(const Runner& r, VerificationReport& report) {
  require_min(r.c(), 4);
  for (int n = r.c().n_min; n <= r.c().n_max; ++n) {
    for (const auto& item : scan(n, std::nullopt, r.c().budget, r.c().jobs, r.c().tamper)) {
      record(report, lower_check(item));
    }
    record(report, sharpness_check(n, r.c().budget));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Statement parse_statement(std::string_view id) {
  for (const auto& [s, name] : statement_table()) {
    if (name == id) return s;
  }
  throw Error(ErrorCode::UnknownStatement, "unknown statement id '" + std::string(id) + "'");
}

std::string statement_id(Statement s) {
  for (const auto& [st, name] : statement_table()) {
    if (st == s) return name;
  }
  return "?";
}

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> list = [] {
    std::vector<Statement> v;
    for (const auto& [s, name] : statement_table()) v.push_back(s);
    return v;
  }();
  return list;
}

VerificationReport verify_statement(const TheoremCase& c) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.statement = statement_id(c.statement);
  report.n_min = c.n_min;
  report.n_max = c.n_max;
  if (c.n_min > c.n_max || c.n_min < 1) {
    throw Error(ErrorCode::InvalidArgument, "invalid range");
  }
  Runner r(c);
  switch (c.statement) {
    case Statement::Prop1:
      require_min(c, 2);
      require_enumerable(c);
      verify_prop1(r, report);
      break;
    case Statement::Prop2:
      require_min(c, 2);
      require_enumerable(c);
      verify_prop2(r, report);
      break;
    case Statement::Prop3:
      require_min(c, 3);
      require_enumerable(c);
      verify_prop3(r, report);
      break;
    case Statement::Thm1:
      require_min(c, 3);
      if (c.n_max > kMaxCanonicalOrder) {
        throw Error(ErrorCode::SizeLimit, "thm1 supports trees up to n = 11");
      }
      verify_thm1(r, report);
      break;
    case Statement::Cor1:
      require_min(c, 3);
      require_enumerable(c);
      verify_cor1(r, report);
      break;
    case Statement::Thm2:
      require_min(c, 2);
      verify_thm2(r, report);
      break;
    case Statement::Thm3Consistency:
      require_min(c, 3);
      require_enumerable(c);
      verify_thm3(r, report);
      break;
    case Statement::Cor2Consistency:
      require_min(c, 3);
      if (c.n_max + 1 > kMaxCanonicalOrder) {
        throw Error(ErrorCode::SizeLimit, "cor2-consistency supports n <= 7");
      }
      require_enumerable(c);
      verify_cor2(r, report);
      break;
    case Statement::Lemma1:
      require_min(c, 2);
      verify_lemma1(r, report);
      break;
    case Statement::Lemma2:
      require_min(c, 5);
      verify_lemma2(r, report);
      break;
    case Statement::Lemma3:
      require_enumerable(c);
      verify_lemma3(r, report);
      break;
    case Statement::Thm4:
      require_enumerable(c);
      verify_thm4(r, report);
      break;
    case Statement::Thm5:
      require_enumerable(c);
      verify_thm5(r, report);
      break;
    case Statement::Thm6:
      require_enumerable(c);
      verify_thm6(r, report);
      break;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

NgScan ng_scan(int n, const std::optional<std::vector<Graph>>& source,
               const SolveBudget& budget, int jobs,
               const std::function<void(TpcCertificate&)>& tamper) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "ng-scan needs n >= 4");
  const auto start = std::chrono::steady_clock::now();
  NgScan out;
  out.report.statement = "ng-scan";
  out.report.n_min = out.report.n_max = n;
  for (const auto& item : scan(n, source, budget, jobs, tamper)) {
    out.rows.push_back(item.row);
    Outcome up = upper_check(item, n);
    Outcome low = lower_check(item);
    if (up.verdict == Verdict::Fail) {
      record(out.report, std::move(up));
    } else if (low.verdict == Verdict::Fail) {
      record(out.report, std::move(low));
    } else if (up.verdict == Verdict::Gap || low.verdict == Verdict::Gap) {
      record(out.report, up.verdict == Verdict::Gap ? std::move(up) : std::move(low));
    } else {
      record(out.report, std::move(up));
    }
  }
  record(out.report, sharpness_check(n, budget));
  out.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorCode::InvalidArgument, "report format must be json, csv or text");
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      Json j;
      j["statement"] = report.statement;
      j["n_min"] = report.n_min;
      j["n_max"] = report.n_max;
      j["examined"] = report.examined;
      j["passes"] = report.passes;
      Json ce = Json::array();
      for (const auto& c : report.counterexamples) {
        Json e;
        e["graph6"] = c.graph6;
        e["details"] = c.details;
        e["certificate"] = c.certificate ? certificate_to_json(*c.certificate) : Json();
        ce.push_back(std::move(e));
      }
      j["counterexamples"] = std::move(ce);
      j["timeouts"] = report.timeouts;
      j["wall_seconds"] = report.wall_seconds;
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      out << "kind,statement,n_min,n_max,graph6,examined,passes,counterexamples,timeouts,"
             "details\n";
      out << "summary," << report.statement << ',' << report.n_min << ',' << report.n_max
          << ",," << report.examined << ',' << report.passes << ','
          << report.counterexamples.size() << ',' << report.timeouts.size() << ",\n";
      for (const auto& c : report.counterexamples) {
        std::string cert = c.certificate ? certificate_to_json(*c.certificate).dump() : "";
        out << "counterexample," << report.statement << ",,," << csv_field(c.graph6)
            << ",,,,," << csv_field(c.details + (cert.empty() ? "" : " certificate=" + cert))
            << '\n';
      }
      for (const auto& t : report.timeouts) {
        out << "timeout," << report.statement << ",,," << csv_field(t) << ",,,,,\n";
      }
      break;
    case ReportFormat::Text:
      out << report.statement << " n=" << report.n_min << ".." << report.n_max << ": "
          << (report.verified() ? "VERIFIED" : report.counterexamples.empty()
                                                   ? "INCONCLUSIVE"
                                                   : "FAILED")
          << " (examined " << report.examined << ", passes " << report.passes
          << ", counterexamples " << report.counterexamples.size() << ", timeouts "
          << report.timeouts.size() << ")\n";
      for (const auto& c : report.counterexamples) {
        out << "  counterexample " << c.graph6 << ": " << c.details << '\n';
      }
      for (const auto& t : report.timeouts) out << "  timeout " << t << '\n';
      break;
  }
  return out.str();
}

std::string ng_rows_csv(const std::vector<NgRow>& rows) {
  std::ostringstream out;
  out << "graph6,tpc,tpc_complement,sum,status\n";
  for (const auto& r : rows) {
    out << csv_field(r.graph6) << ',' << r.tpc << ',' << r.tpc_complement << ',' << r.sum
        << ',' << r.status << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::Io, "write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot move output into place at " + path);
  }
}

int default_jobs() {
  const char* env = std::getenv("TPC_LAB_JOBS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
  return static_cast<int>(v);
}

}  // namespace tpc
