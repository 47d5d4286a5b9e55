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

#include "tpc/total_coloring.hpp"

#include <algorithm>

#include "path_search.hpp"
#include "tpc/error.hpp"

namespace tpc {

namespace {

void require_fit(const Graph& g, const TotalColoring& c) {
  if (!c.fits(g)) {
    throw Error(ErrorCode::MalformedColoring,
                "coloring does not match graph (vertex or edge count differs)");
  }
}

}  // namespace

bool TotalColoring::fully_assigned() const {
  auto assigned = [](Color x) { return x != kUnassigned; };
  return std::all_of(vertex_colors.begin(), vertex_colors.end(), assigned) &&
         std::all_of(edge_colors.begin(), edge_colors.end(), assigned);
}

std::set<Color> TotalColoring::palette() const {
  std::set<Color> p;
  for (Color x : vertex_colors) {
    if (x != kUnassigned) p.insert(x);
  }
  for (Color x : edge_colors) {
    if (x != kUnassigned) p.insert(x);
  }
  return p;
}

PathEndpointView endpoint_view(const Graph& g, const TotalColoring& c,
                               const PathWitness& p) {
  if (!is_path_in(g, p)) throw Error(ErrorCode::NotAPath, "not a path of the graph");
  const auto& vs = p.vertices;
  const std::size_t s = vs.size();
  // With s == 2 these indices give the single-edge convention directly.
  return {c.edge(g, vs[0], vs[1]), c.edge(g, vs[s - 2], vs[s - 1]),
          c.vertex_colors[vs[1]], c.vertex_colors[vs[s - 2]]};
}

bool is_total_proper_path(const Graph& g, const TotalColoring& c,
                          const PathWitness& p, bool wildcard) {
  require_fit(g, c);
  if (!is_path_in(g, p)) throw Error(ErrorCode::NotAPath, "not a path of the graph");
  const Color* vc = c.vertex_colors.data();
  const Color* ec = c.edge_colors.data();
  return wildcard ? detail::proper_sequence<true>(g, vc, ec, p.vertices)
                  : detail::proper_sequence<false>(g, vc, ec, p.vertices);
}

std::optional<PathWitness> find_total_proper_path(const Graph& g,
                                                  const TotalColoring& c, Vertex u,
                                                  Vertex v, bool wildcard) {
  require_fit(g, c);
  if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::InvalidArgument, "path endpoints must be distinct vertices");
  }
  std::optional<PathWitness> found;
  auto take = [&](const std::vector<Vertex>& path) {
    found = PathWitness{path};
    return true;
  };
  const Color* vc = c.vertex_colors.data();
  const Color* ec = c.edge_colors.data();
  if (wildcard) {
    detail::PathSearch<true>(g, vc, ec).search(u, v, take);
  } else {
    detail::PathSearch<false>(g, vc, ec).search(u, v, take);
  }
  return found;
}

void for_each_total_proper_path(
    const Graph& g, const TotalColoring& c, Vertex u, Vertex v,
    const std::function<bool(const PathWitness&)>& visit) {
  require_fit(g, c);
  detail::PathSearch<false>(g, c.vertex_colors.data(), c.edge_colors.data())
      .search(u, v, [&](const std::vector<Vertex>& path) {
        return !visit(PathWitness{path});
      });
}

ConnectivityReport check_total_proper_connected(const Graph& g, const TotalColoring& c,
                                                bool wildcard) {
  ConnectivityReport report;
  report.connected = true;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto path = find_total_proper_path(g, c, u, v, wildcard);
      if (!path && !report.failing_pair) {
        report.connected = false;
        report.failing_pair = {u, v};
      }
      report.witnesses.push_back({u, v, std::move(path)});
    }
  }
  return report;
}

bool is_total_proper_connected(const Graph& g, const TotalColoring& c, bool wildcard) {
  require_fit(g, c);
  const Color* vc = c.vertex_colors.data();
  const Color* ec = c.edge_colors.data();
  auto stop = [](const std::vector<Vertex>&) { return true; };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool ok = wildcard ? detail::PathSearch<true>(g, vc, ec).search(u, v, stop)
                         : detail::PathSearch<false>(g, vc, ec).search(u, v, stop);
      if (!ok) return false;
    }
  }
  return true;
}

bool has_strong_property(const Graph& g, const TotalColoring& c) {
  require_fit(g, c);
  if (!c.fully_assigned()) {
    throw Error(ErrorCode::PreconditionViolated,
                "strong property needs a fully assigned coloring");
  }
  if (!is_total_proper_connected(g, c)) {
    throw Error(ErrorCode::PreconditionViolated,
                "strong property needs a total-proper connected coloring");
  }
  const Color* vc = c.vertex_colors.data();
  const Color* ec = c.edge_colors.data();
  detail::PathSearch<false> search(g, vc, ec);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      // Paths passing condition (1), reduced to their (start_e, end_e).
      std::vector<std::pair<Color, Color>> ends;
      bool satisfied = false;
      search.search(u, v, [&](const std::vector<Vertex>& p) {
        const std::size_t s = p.size();
        const Color start_v = vc[p[1]];
        const Color end_v = vc[p[s - 2]];
        if (start_v == vc[u] || end_v == vc[v]) return false;
        const Color start_e = ec[g.edge_id(p[0], p[1])];
        const Color end_e = ec[g.edge_id(p[s - 2], p[s - 1])];
        if (start_e == vc[u] || end_e == vc[v]) return false;
        for (auto [se, ee] : ends) {
          if (se != start_e && ee != end_e) {
            satisfied = true;
            return true;
          }
        }
        ends.emplace_back(start_e, end_e);
        return false;
      });
      if (!satisfied) return false;
    }
  }
  return true;
}

}  // namespace tpc
