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

#include "tpc/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "tpc/error.hpp"

namespace tpc {

namespace {

const std::map<std::string, FamilyKind, std::less<>>& family_names() {
  static const std::map<std::string, FamilyKind, std::less<>> names = {
      {"path", FamilyKind::Path},
      {"cycle", FamilyKind::Cycle},
      {"star", FamilyKind::Star},
      {"complete", FamilyKind::Complete},
      {"kst", FamilyKind::CompleteBipartite},
      {"double-star", FamilyKind::DoubleStar},
      {"s4e", FamilyKind::S4PlusE},
      {"c4e", FamilyKind::C4PlusE},
      {"h1", FamilyKind::H1},
      {"h2", FamilyKind::H2},
      {"h3", FamilyKind::H3},
      {"h4", FamilyKind::H4},
      {"kst-plus-v", FamilyKind::KstPlusV},
      {"h-prime", FamilyKind::HPrime},
      {"thm6", FamilyKind::Theorem6},
  };
  return names;
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::InvalidFamily, family_name(spec.kind) + ": " + why);
}

std::size_t arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::S4PlusE:
    case FamilyKind::C4PlusE:
      return 0;
    case FamilyKind::CompleteBipartite:
    case FamilyKind::DoubleStar:
      return 2;
    case FamilyKind::KstPlusV:
      return 4;
    default:
      return 1;
  }
}

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, edges);
}

/// Unicyclic H-graph layout: cycle vertices first, then bridge leaves.
struct Unicyclic {
  Graph graph;
  std::vector<Edge> bridges;  // e_1, e_2, ... in order
};

Unicyclic unicyclic(UnicyclicVariant variant, int n) {
  std::vector<std::pair<int, int>> e;
  std::vector<Edge> bridge;
  auto add_bridge = [&](int a, int b) {
    e.push_back({a, b});
    bridge.push_back({a, b});
  };
  switch (variant) {
    case UnicyclicVariant::H1:
      e = {{0, 1}, {1, 2}, {0, 2}};
      for (int leaf = 3; leaf < n; ++leaf) add_bridge(0, leaf);
      break;
    case UnicyclicVariant::H2:
      e = {{0, 1}, {1, 2}, {0, 2}};
      for (int leaf = 3; leaf < n - 1; ++leaf) add_bridge(0, leaf);
      add_bridge(3, n - 1);
      break;
    case UnicyclicVariant::H3:
      e = {{0, 1}, {1, 2}, {0, 2}};
      for (int leaf = 3; leaf < n - 1; ++leaf) add_bridge(0, leaf);
      add_bridge(1, n - 1);
      break;
    case UnicyclicVariant::H4:
      e = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
      for (int leaf = 4; leaf < n; ++leaf) add_bridge(0, leaf);
      break;
  }
  return {from_pairs(n, e), bridge};
}

Graph kst_plus(int s, int t, std::vector<std::pair<int, int>> extra, int extra_vertices) {
  std::vector<std::pair<int, int>> e = std::move(extra);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) e.push_back({i, s + j});
  }
  return from_pairs(s + t + extra_vertices, e);
}

int attachment_vertex(int s, Attachment a) { return a.side == Side::U ? a.index - 1 : s + a.index - 1; }

}  // namespace

FamilySpec parse_family(std::string_view name, std::vector<int> params) {
  const auto& names = family_names();
  auto it = names.find(name);
  if (it == names.end()) {
    throw Error(ErrorCode::InvalidFamily, "unknown family '" + std::string(name) + "'");
  }
  FamilySpec spec{it->second, std::move(params)};
  validate(spec);
  return spec;
}

std::string family_name(FamilyKind kind) {
  for (const auto& [name, k] : family_names()) {
    if (k == kind) return name;
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (p.size() != arity(spec.kind)) {
    bad(spec, "expected " + std::to_string(arity(spec.kind)) + " parameter(s)");
  }
  auto need = [&](bool ok, const char* why) {
    if (!ok) bad(spec, why);
  };
  const int cap = kMaxOrder;
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      need(p[0] >= 1 && p[0] <= cap, "n must be in 1..62");
      break;
    case FamilyKind::Cycle:
      need(p[0] >= 3 && p[0] <= cap, "n must be in 3..62");
      break;
    case FamilyKind::Star:
      need(p[0] >= 2 && p[0] <= cap, "n must be in 2..62");
      break;
    case FamilyKind::CompleteBipartite:
      need(p[0] >= 1 && p[1] >= 1 && p[0] + p[1] <= cap, "need s,t >= 1, s+t <= 62");
      break;
    case FamilyKind::DoubleStar:
      need(p[0] >= 2 && p[1] >= 2 && p[0] + p[1] <= cap, "need a,b >= 2, a+b <= 62");
      break;
    case FamilyKind::S4PlusE:
    case FamilyKind::C4PlusE:
      break;
    case FamilyKind::H1:
    case FamilyKind::H2:
    case FamilyKind::H3:
    case FamilyKind::H4:
      need(p[0] >= 5 && p[0] <= cap, "n must be in 5..62");
      break;
    case FamilyKind::KstPlusV:
      need(p[0] >= p[1] && p[1] >= 2 && p[0] + p[1] < cap, "need s >= t >= 2, s+t < 62");
      need(p[2] == 0 || p[2] == 1, "side must be 0 (U) or 1 (W)");
      need(p[3] >= 1 && p[3] <= (p[2] == 0 ? p[0] : p[1]), "attachment index out of range");
      break;
    case FamilyKind::HPrime:
      need(p[0] >= 2 && p[0] + 4 <= cap, "need 2 <= s <= 58");
      break;
    case FamilyKind::Theorem6:
      need(p[0] >= 4 && p[0] <= cap, "n must be in 4..62");
      break;
  }
}

Graph build_family(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  std::vector<std::pair<int, int>> e;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (int i = 0; i + 1 < p[0]; ++i) e.push_back({i, i + 1});
      return from_pairs(p[0], e);
    case FamilyKind::Cycle:
      for (int i = 0; i < p[0]; ++i) e.push_back({i, (i + 1) % p[0]});
      return from_pairs(p[0], e);
    case FamilyKind::Star:
      for (int i = 1; i < p[0]; ++i) e.push_back({0, i});
      return from_pairs(p[0], e);
    case FamilyKind::Complete:
      for (int i = 0; i < p[0]; ++i) {
        for (int j = i + 1; j < p[0]; ++j) e.push_back({i, j});
      }
      return from_pairs(p[0], e);
    case FamilyKind::CompleteBipartite:
      return kst_plus(p[0], p[1], {}, 0);
    case FamilyKind::DoubleStar: {
      const int a = p[0], b = p[1];
      for (int i = 1; i < a; ++i) e.push_back({0, i});
      for (int i = 1; i < b; ++i) e.push_back({a, a + i});
      e.push_back({0, a});
      return from_pairs(a + b, e);
    }
    case FamilyKind::S4PlusE:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    case FamilyKind::C4PlusE:
      return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    case FamilyKind::H1:
      return unicyclic(UnicyclicVariant::H1, p[0]).graph;
    case FamilyKind::H2:
      return unicyclic(UnicyclicVariant::H2, p[0]).graph;
    case FamilyKind::H3:
      return unicyclic(UnicyclicVariant::H3, p[0]).graph;
    case FamilyKind::H4:
      return unicyclic(UnicyclicVariant::H4, p[0]).graph;
    case FamilyKind::KstPlusV: {
      const int s = p[0], t = p[1];
      Attachment a{p[2] == 0 ? Side::U : Side::W, p[3]};
      return kst_plus(s, t, {{attachment_vertex(s, a), s + t}}, 1);
    }
    case FamilyKind::HPrime: {
      const int s = p[0];
      return kst_plus(s, 2, {{s, s + 2}, {s + 1, s + 3}}, 2);
    }
    case FamilyKind::Theorem6: {
      const int n = p[0];
      const int us = (n - 1) / 2;
      const int ws = n - 1 - us;
      const int reach = (n - 3) / 4;
      auto u = [](int i) { return i; };
      auto w = [&](int j) { return us + j; };
      for (int i = 1; i <= us; ++i) e.push_back({0, u(i)});
      for (int a = 1; a <= ws; ++a) {
        for (int b = a + 1; b <= ws; ++b) e.push_back({w(a), w(b)});
      }
      std::set<std::pair<int, int>> cross;
      for (int i = 1; i <= us; ++i) {
        for (int d = 0; d <= reach; ++d) {
          // Subscripts mod |W| taken in 1..|W|.
          const int j = (i + d - 1) % ws + 1;
          cross.insert({u(i), w(j)});
        }
      }
      e.insert(e.end(), cross.begin(), cross.end());
      return from_pairs(n, e);
    }
  }
  bad(spec, "unhandled family");
}

TotalColoring color_tree(const Graph& t) {
  if (t.order() < 3 || !t.is_tree()) {
    throw Error(ErrorCode::PreconditionViolated, "color_tree needs a tree on >= 3 vertices");
  }
  TotalColoring c(t);
  auto smallest_free = [](const std::set<Color>& used) {
    Color x = 1;
    while (used.count(x)) ++x;
    return x;
  };
  std::vector<Vertex> queue{0};
  VertexSet seen = 1;
  c.vertex_colors[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (VertexSet nb = t.neighbours(x) & ~seen; nb; nb &= nb - 1) {
      const Vertex y = std::countr_zero(nb);
      std::set<Color> used{c.vertex_colors[x]};
      for (VertexSet at = t.neighbours(x); at; at &= at - 1) {
        used.insert(c.edge(t, x, std::countr_zero(at)));
      }
      c.set_edge(t, x, y, smallest_free(used));
      c.vertex_colors[y] = smallest_free({c.vertex_colors[x], c.edge(t, x, y)});
      seen |= VertexSet{1} << y;
      queue.push_back(y);
    }
  }
  return c;
}

TotalColoring color_traceable(const Graph& g, const PathWitness& ham) {
  if (!is_path_in(g, ham) || static_cast<int>(ham.vertices.size()) != g.order()) {
    throw Error(ErrorCode::PreconditionViolated, "not a Hamiltonian path of the graph");
  }
  TotalColoring c(g, 1);
  int position = 0;
  const auto& vs = ham.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    c.vertex_colors[vs[i]] = position++ % 3 + 1;
    if (i + 1 < vs.size()) c.set_edge(g, vs[i], vs[i + 1], position++ % 3 + 1);
  }
  return c;
}

namespace {

// Case t = 2 of the K_{s,t} + v colorings, expressed through role vertices.
void color_kst2_v_on_w(const Graph& g, TotalColoring& c, int u1, int w1, int w2) {
  c.vertex_colors[w1] = 1;
  c.set_edge(g, u1, w2, 1);
  c.vertex_colors[w2] = 2;
  c.set_edge(g, u1, w1, 2);
}

// The 6-cycle coloring. us/ws list U and W in role order (u1, u2, ...).
void color_six_cycle(const Graph& g, TotalColoring& c, const std::vector<int>& us,
                     const std::vector<int>& ws) {
  auto u = [&](int i) { return us[i - 1]; };
  auto w = [&](int j) { return ws[j - 1]; };
  c.vertex_colors[u(1)] = c.vertex_colors[w(2)] = 1;
  c.set_edge(g, w(1), u(2), 1);
  c.set_edge(g, u(3), w(3), 1);
  c.vertex_colors[u(2)] = c.vertex_colors[w(3)] = 2;
  c.set_edge(g, u(1), w(1), 2);
  c.set_edge(g, w(2), u(3), 2);
  c.vertex_colors[w(1)] = c.vertex_colors[u(3)] = 3;
  c.set_edge(g, u(2), w(2), 3);
  c.set_edge(g, w(3), u(1), 3);
  for (int i = 4; i <= static_cast<int>(us.size()); ++i) {
    c.vertex_colors[u(i)] = 1;
    c.set_edge(g, w(1), u(i), 2);
  }
  for (int j = 4; j <= static_cast<int>(ws.size()); ++j) {
    c.set_edge(g, u(3), w(j), 1);
    c.vertex_colors[w(j)] = 2;
  }
}

std::vector<int> role_order(std::vector<int> first, int begin, int end) {
  for (int x = begin; x < end; ++x) {
    if (std::find(first.begin(), first.end(), x) == first.end()) first.push_back(x);
  }
  return first;
}

}  // namespace

ColoredGraph color_lemma1(int s, int t, Attachment attachment) {
  FamilySpec spec{FamilyKind::KstPlusV,
                  {s, t, attachment.side == Side::U ? 0 : 1, attachment.index}};
  validate(spec);
  Graph g = build_family(spec);
  TotalColoring c(g, 3);
  const int anchor = attachment_vertex(s, attachment);
  const int v = s + t;

  if (t == 2) {
    if (attachment.side == Side::W) {
      const int w1 = anchor, w2 = anchor == s ? s + 1 : s;
      color_kst2_v_on_w(g, c, 0, w1, w2);
    } else {
      const int u1 = anchor, u2 = anchor == 0 ? 1 : 0;
      const int w1 = s, w2 = s + 1;
      c.vertex_colors[w1] = c.vertex_colors[u2] = 1;
      c.set_edge(g, u1, w2, 1);
      c.vertex_colors[w2] = 2;
      c.set_edge(g, u1, w1, 2);
      c.set_edge(g, u2, w1, 2);
      c.set_edge(g, v, u1, 2);
    }
    return {std::move(g), std::move(c)};
  }

  if (s == 3 && t == 3) {
    auto ham = find_hamiltonian_path(g);
    if (ham.status != SearchStatus::Found) {
      throw Error(ErrorCode::PreconditionViolated, "K_{3,3} + v expected to be traceable");
    }
    return {g, color_traceable(g, *ham.path)};
  }

  // s >= 4: first 6-cycle u1 w1 u2 w2 u3 w3 (lexicographic over ordered
  // triples) leaving v's neighbour off the cycle.
  std::vector<int> cycle_u, cycle_w;
  for (int a1 = 0; a1 < s && cycle_u.empty(); ++a1) {
    for (int a2 = 0; a2 < s && cycle_u.empty(); ++a2) {
      for (int a3 = 0; a3 < s && cycle_u.empty(); ++a3) {
        if (a1 == a2 || a1 == a3 || a2 == a3) continue;
        for (int b1 = s; b1 < s + t && cycle_u.empty(); ++b1) {
          for (int b2 = s; b2 < s + t && cycle_u.empty(); ++b2) {
            for (int b3 = s; b3 < s + t && cycle_u.empty(); ++b3) {
              if (b1 == b2 || b1 == b3 || b2 == b3) continue;
              const std::array<int, 6> on{a1, a2, a3, b1, b2, b3};
              if (std::find(on.begin(), on.end(), anchor) != on.end()) continue;
              cycle_u = {a1, a2, a3};
              cycle_w = {b1, b2, b3};
            }
          }
        }
      }
    }
  }
  if (!cycle_u.empty()) {
    color_six_cycle(g, c, role_order(cycle_u, 0, s), role_order(cycle_w, s, s + t));
    return {std::move(g), std::move(c)};
  }
  // No such cycle: t = 3 and v hangs off W; its neighbour plays w2.
  std::vector<int> ws = role_order({}, s, s + t);
  std::erase(ws, anchor);
  ws.insert(ws.begin() + 1, anchor);
  color_six_cycle(g, c, role_order({0, 1, 2}, 0, s), ws);
  return {std::move(g), std::move(c)};
}

ColoredGraph color_h_prime(int s) {
  Graph g = build_family({FamilyKind::HPrime, {s}});
  TotalColoring c(g, 3);
  color_kst2_v_on_w(g, c, 0, s, s + 1);
  c.vertex_colors[s + 3] = 3;
  c.set_edge(g, s + 1, s + 3, 3);
  return {std::move(g), std::move(c)};
}

int lemma2_min_order(UnicyclicVariant variant) {
  switch (variant) {
    case UnicyclicVariant::H1:
      return 5;
    case UnicyclicVariant::H2:
      return 6;
    default:
      return 7;
  }
}

ColoredGraph color_lemma2(UnicyclicVariant variant, int n) {
  if (n < lemma2_min_order(variant) || n > kMaxOrder) {
    throw Error(ErrorCode::InvalidFamily,
                "explicit coloring needs n >= " + std::to_string(lemma2_min_order(variant)));
  }
  auto [g, bridge] = unicyclic(variant, n);
  TotalColoring c(g, 1);
  auto set_bridge = [&](int j, Color col) {
    c.set_edge(g, bridge[j - 1].u, bridge[j - 1].v, col);
  };

  if (variant == UnicyclicVariant::H4) {
    // u v w x = 0 1 2 3.
    for (int j = 1; j <= n - 4; ++j) set_bridge(j, j);
    c.vertex_colors[0] = n - 3;
    c.vertex_colors[1] = c.vertex_colors[3] = 2;
    c.set_edge(g, 1, 2, 3);
    c.set_edge(g, 3, 0, 3);
    c.vertex_colors[2] = 4;
    return {std::move(g), std::move(c)};
  }

  // Triangle u v w = 0 1 2; the H1 coloring, then the H2/H3 adjustments.
  c.vertex_colors[0] = 1;
  c.set_edge(g, 1, 2, 1);
  for (int j = 1; j <= n - 3; ++j) set_bridge(j, j + 1);
  c.set_edge(g, 0, 1, 2);
  c.vertex_colors[2] = 2;
  c.vertex_colors[1] = 3;
  c.set_edge(g, 2, 0, 3);
  if (variant == UnicyclicVariant::H1) return {std::move(g), std::move(c)};

  set_bridge(n - 3, 1);
  c.vertex_colors[3] = 3;  // x
  if (variant == UnicyclicVariant::H3) set_bridge(n - 3, 4);
  return {std::move(g), std::move(c)};
}

}  // namespace tpc
