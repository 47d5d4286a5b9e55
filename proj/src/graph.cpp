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

#include "tpc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tpc/error.hpp"

namespace tpc {

namespace {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw Error(ErrorCode::SizeLimit,
                "graph order " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  build();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_order(n);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "loop edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate edge");
  }
  build();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        for (auto [u, v] : edges) list.push_back({u, v});
        return list;
      }()) {}

void Graph::build() {
  adj_.assign(n_, 0);
  edge_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int id = 0; id < size(); ++id) {
    auto [u, v] = edges_[id];
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    edge_index_[u * n_ + v] = id;
    edge_index_[v * n_ + u] = id;
  }
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1;
}

bool Graph::is_complete() const noexcept {
  return size() == n_ * (n_ - 1) / 2;
}

bool Graph::is_tree() const {
  return n_ >= 1 && size() == n_ - 1 && is_connected(*this);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> e(edges_.begin(), edges_.end());
  e.push_back({u, v});
  return Graph(n_, e);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  std::vector<Edge> e;
  Edge drop{std::min(u, v), std::max(u, v)};
  for (const Edge& x : edges_) {
    if (x != drop) e.push_back(x);
  }
  return Graph(n_, e);
}

Graph Graph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.push_back({perm[u], perm[v]});
  return Graph(n_, e);
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(n_, -1);
  int m = 0;
  for (int v = 0; v < n_; ++v) {
    if (keep & bit(v)) index[v] = m++;
  }
  std::vector<Edge> e;
  for (auto [u, v] : edges_) {
    if (index[u] >= 0 && index[v] >= 0) e.push_back({index[u], index[v]});
  }
  return Graph(m, e);
}

bool is_path_in(const Graph& g, const PathWitness& p) {
  const auto& vs = p.vertices;
  if (vs.size() < 2) return false;
  VertexSet seen = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex v = vs[i];
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
    if (i > 0 && !g.adjacent(vs[i - 1], v)) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) e.push_back({u, v});
    }
  }
  return Graph(n, e);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet reached = bit(0);
  VertexSet frontier = bit(0);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) {
      next |= g.neighbours(std::countr_zero(f));
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == g.all_vertices();
}

namespace {

struct LowLink {
  explicit LowLink(const Graph& g)
      : g(g), disc(g.order(), -1), low(g.order(), 0) {}

  void run(Vertex v, Vertex parent) {
    disc[v] = low[v] = tick++;
    int children = 0;
    bool cut = false;
    for (VertexSet nb = g.neighbours(v); nb; nb &= nb - 1) {
      Vertex w = std::countr_zero(nb);
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      run(w, v);
      low[v] = std::min(low[v], low[w]);
      if (low[w] > disc[v]) bridge_list.push_back({std::min(v, w), std::max(v, w)});
      if (parent >= 0 && low[w] >= disc[v]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
    if (cut) cuts.push_back(v);
  }

  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int tick = 0;
  std::vector<Edge> bridge_list;
  std::vector<Vertex> cuts;
};

LowLink low_link(const Graph& g) {
  LowLink ll(g);
  for (int v = 0; v < g.order(); ++v) {
    if (ll.disc[v] < 0) ll.run(v, -1);
  }
  return ll;
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  auto b = low_link(g).bridge_list;
  std::sort(b.begin(), b.end());
  return b;
}

int max_bridge_degree(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "max_bridge_degree needs a connected graph");
  }
  std::vector<int> count(g.order(), 0);
  for (auto [u, v] : bridges(g)) {
    ++count[u];
    ++count[v];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  auto c = low_link(g).cuts;
  std::sort(c.begin(), c.end());
  return c;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, std::int64_t budget)
      : g_(g), budget_(budget), full_(g.all_vertices()) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) < g.degree(b);
    });
  }

  HamiltonianResult run() {
    for (Vertex start : order_) {
      path_.assign(1, start);
      if (extend(bit(start))) {
        return {SearchStatus::Found, PathWitness{path_}};
      }
      if (exceeded_) return {SearchStatus::BudgetExceeded, std::nullopt};
    }
    return {SearchStatus::NoneExists, std::nullopt};
  }

 private:
  bool extend(VertexSet visited) {
    if (visited == full_) return true;
    const Vertex last = path_.back();
    const VertexSet unvisited = full_ & ~visited;
    VertexSet open = g_.neighbours(last) & unvisited;
    // An unvisited vertex whose neighbours are all on the path can only be
    // the next and final vertex.
    if (std::popcount(unvisited) > 1) {
      for (VertexSet u = unvisited; u; u &= u - 1) {
        if (!(g_.neighbours(std::countr_zero(u)) & unvisited)) return false;
      }
    }
    for (Vertex v : order_) {
      if (!(open & bit(v))) continue;
      if (++steps_ > budget_) {
        exceeded_ = true;
        return false;
      }
      path_.push_back(v);
      if (extend(visited | bit(v))) return true;
      path_.pop_back();
      if (exceeded_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::int64_t budget_;
  std::int64_t steps_ = 0;
  bool exceeded_ = false;
  VertexSet full_;
  std::vector<Vertex> order_;
  std::vector<Vertex> path_;
};

}  // namespace

HamiltonianResult find_hamiltonian_path(const Graph& g, std::int64_t step_budget) {
  if (g.order() == 0 || !is_connected(g)) {
    return {SearchStatus::NoneExists, std::nullopt};
  }
  if (g.order() == 1) return {SearchStatus::Found, PathWitness{{0}}};
  // More than two vertices of degree one rule out a spanning path.
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
  if (leaves > 2) return {SearchStatus::NoneExists, std::nullopt};
  return HamiltonSearch(g, step_budget).run();
}

Graph low_degree_spanning_tree(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "spanning tree needs a connected graph");
  }
  const int n = g.order();
  if (n <= 1) return Graph(n);

  // BFS seed.
  std::vector<VertexSet> tree(n, 0);
  {
    VertexSet reached = bit(0);
    std::vector<Vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (VertexSet nb = g.neighbours(x) & ~reached; nb; nb &= nb - 1) {
        Vertex y = std::countr_zero(nb);
        reached |= bit(y);
        tree[x] |= bit(y);
        tree[y] |= bit(x);
        queue.push_back(y);
      }
    }
  }

  auto deg = [&](Vertex v) { return std::popcount(tree[v]); };
  auto side_of = [&](Vertex root, Vertex cut_from) {
    // Vertices reachable from root in the tree without crossing root-cut_from.
    VertexSet seen = bit(root);
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      VertexSet nb = tree[x] & ~seen;
      if (x == root) nb &= ~bit(cut_from);
      for (; nb; nb &= nb - 1) {
        Vertex y = std::countr_zero(nb);
        seen |= bit(y);
        stack.push_back(y);
      }
    }
    return seen;
  };

  // Each accepted swap lowers the degree of a maximum-degree vertex without
  // creating a new one, so (max degree, #vertices at max) decreases.
  bool improved = true;
  while (improved) {
    improved = false;
    int delta = 0;
    for (int v = 0; v < n; ++v) delta = std::max(delta, deg(v));
    if (delta <= 2) break;
    for (Vertex x = 0; x < n && !improved; ++x) {
      if (deg(x) != delta) continue;
      for (VertexSet tn = tree[x]; tn && !improved; tn &= tn - 1) {
        Vertex y = std::countr_zero(tn);
        VertexSet b_side = side_of(y, x);
        for (int id = 0; id < g.size() && !improved; ++id) {
          auto [a, b] = g.edge(id);
          if (tree[a] & bit(b)) continue;
          bool a_in = b_side & bit(a), b_in = b_side & bit(b);
          if (a_in == b_in || a == x || b == x) continue;
          auto new_deg = [&](Vertex w) { return deg(w) + 1 - (w == y ? 1 : 0); };
          if (new_deg(a) >= delta || new_deg(b) >= delta) continue;
          tree[x] &= ~bit(y);
          tree[y] &= ~bit(x);
          tree[a] |= bit(b);
          tree[b] |= bit(a);
          improved = true;
        }
      }
    }
  }

  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (VertexSet nb = tree[u] & ~(bit(u + 1) - 1); nb; nb &= nb - 1) {
      e.push_back({u, std::countr_zero(nb)});
    }
  }
  return Graph(n, e);
}

}  // namespace tpc
