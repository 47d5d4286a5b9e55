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

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tpc {

using Vertex = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 62;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one 64-bit row per vertex. Edges are stored once
/// with u < v and sorted; the position of an edge in edges() is its edge id,
/// which colorings use to index edge colors.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (adj_[u] >> v) & 1u;
  }
  VertexSet neighbours(Vertex v) const noexcept { return adj_[v]; }
  int degree(Vertex v) const noexcept { return std::popcount(adj_[v]); }
  int max_degree() const noexcept;
  VertexSet all_vertices() const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  /// Edge id of {u,v}, or -1 when u and v are not adjacent.
  int edge_id(Vertex u, Vertex v) const noexcept {
    return edge_index_[u * n_ + v];
  }

  bool is_complete() const noexcept;
  bool is_tree() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Edge {a,b} of *this becomes {perm[a], perm[b]} in the result.
  Graph relabelled(std::span<const int> perm) const;
  /// Subgraph induced by the vertices in keep, renumbered in ascending order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<int> edge_index_;
};

/// Ordered vertex sequence of a simple path.
struct PathWitness {
  std::vector<Vertex> vertices;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// True iff p is a simple path in g with at least two vertices.
bool is_path_in(const Graph& g, const PathWitness& p);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);

/// Bridges via DFS low-link, each reported with u < v.
std::vector<Edge> bridges(const Graph& g);
/// Maximum number of bridges incident with a single vertex. Throws on
/// disconnected input.
int max_bridge_degree(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);
bool is_two_connected(const Graph& g);

enum class SearchStatus { Found, NoneExists, BudgetExceeded };

struct HamiltonianResult {
  SearchStatus status;
  std::optional<PathWitness> path;
};

/// DFS with degree-sorted branching; the step budget caps the number of
/// path extensions tried.
HamiltonianResult find_hamiltonian_path(const Graph& g,
                                        std::int64_t step_budget = 1'000'000);

/// Spanning tree with heuristically reduced maximum degree: a BFS tree
/// improved by edge swaps. Throws on disconnected input.
Graph low_degree_spanning_tree(const Graph& g);

}  // namespace tpc
