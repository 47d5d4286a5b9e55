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

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

using Color = int;

/// Color 0 marks an unassigned element.
inline constexpr Color kUnassigned = 0;

/// Colors on V(G) and E(G). Edge colors are indexed by the host graph's
/// edge ids, so a coloring is only meaningful next to its graph.
struct TotalColoring {
  std::vector<Color> vertex_colors;
  std::vector<Color> edge_colors;

  TotalColoring() = default;
  explicit TotalColoring(const Graph& g, Color fill = kUnassigned)
      : vertex_colors(g.order(), fill), edge_colors(g.size(), fill) {}

  Color edge(const Graph& g, Vertex u, Vertex v) const {
    return edge_colors[g.edge_id(u, v)];
  }
  void set_edge(const Graph& g, Vertex u, Vertex v, Color c) {
    edge_colors[g.edge_id(u, v)] = c;
  }

  bool fits(const Graph& g) const {
    return static_cast<int>(vertex_colors.size()) == g.order() &&
           static_cast<int>(edge_colors.size()) == g.size();
  }
  bool fully_assigned() const;
  std::set<Color> palette() const;
  int palette_size() const { return static_cast<int>(palette().size()); }

  friend bool operator==(const TotalColoring&, const TotalColoring&) = default;
};

/// First/last edge and first/last internal vertex colors of a path. For a
/// single edge v1 vs: start_e = end_e = c(v1 vs), start_v = c(vs),
/// end_v = c(v1).
struct PathEndpointView {
  Color start_e;
  Color end_e;
  Color start_v;
  Color end_v;
};

PathEndpointView endpoint_view(const Graph& g, const TotalColoring& c,
                               const PathWitness& p);

/// Conditions (i) adjacent path edges differ, (ii) adjacent internal
/// vertices differ, (iii) an internal vertex differs from both incident path
/// edges. With wildcard set, a comparison involving color 0 passes.
/// Throws Error(NotAPath) if p is not a simple path of g.
bool is_total_proper_path(const Graph& g, const TotalColoring& c,
                          const PathWitness& p, bool wildcard = false);

/// DFS over simple paths, neighbours in ascending order, first hit wins.
std::optional<PathWitness> find_total_proper_path(const Graph& g,
                                                  const TotalColoring& c, Vertex u,
                                                  Vertex v, bool wildcard = false);

/// Calls visit on every total-proper u-v path until it returns false.
void for_each_total_proper_path(const Graph& g, const TotalColoring& c, Vertex u,
                                Vertex v,
                                const std::function<bool(const PathWitness&)>& visit);

/// Witnesses for all unordered pairs u < v, in lexicographic pair order.
struct PairWitness {
  Vertex u;
  Vertex v;
  std::optional<PathWitness> path;
};
using PairWitnessMap = std::vector<PairWitness>;

struct ConnectivityReport {
  bool connected = false;
  PairWitnessMap witnesses;  ///< complete when connected
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
};

ConnectivityReport check_total_proper_connected(const Graph& g, const TotalColoring& c,
                                                bool wildcard = false);

/// Cheap yes/no version of the check above.
bool is_total_proper_connected(const Graph& g, const TotalColoring& c,
                               bool wildcard = false);

/// Strong property: every pair u, v has total-proper paths P1, P2 with
/// c(u) != start_v(Pi), c(v) != end_v(Pi), and {c(u), start_e(P1),
/// start_e(P2)}, {c(v), end_e(P1), end_e(P2)} both 3-sets. P1 and P2 may
/// share vertices. Throws Error(PreconditionViolated) when c has unassigned
/// elements or does not make g total-proper connected.
bool has_strong_property(const Graph& g, const TotalColoring& c);

}  // namespace tpc
