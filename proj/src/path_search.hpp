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

// Internal: the total-proper path DFS shared by the checker and the solver.

#pragma once

#include <bit>
#include <vector>

#include "tpc/graph.hpp"
#include "tpc/total_coloring.hpp"

namespace tpc::detail {

template <bool Wildcard>
constexpr bool differ(Color a, Color b) {
  if constexpr (Wildcard) {
    return a == kUnassigned || b == kUnassigned || a != b;
  } else {
    return a != b;
  }
}

/// Checks conditions (i)-(iii) on a vertex sequence already known to be a
/// simple path of g.
template <bool Wildcard>
bool proper_sequence(const Graph& g, const Color* vc, const Color* ec,
                     const std::vector<Vertex>& p) {
  const std::size_t len = p.size();
  for (std::size_t i = 1; i + 1 < len; ++i) {
    const Color in = ec[g.edge_id(p[i - 1], p[i])];
    const Color out = ec[g.edge_id(p[i], p[i + 1])];
    const Color mid = vc[p[i]];
    if (!differ<Wildcard>(in, out) || !differ<Wildcard>(mid, in) ||
        !differ<Wildcard>(mid, out)) {
      return false;
    }
    if (i >= 2 && !differ<Wildcard>(vc[p[i - 1]], mid)) return false;
  }
  return true;
}

/// Enumerates total-proper source-target paths in DFS order with
/// ascending neighbour choice. Conditions are checked as the path grows, so
/// every prefix of a visited path is itself consistent.
template <bool Wildcard>
class PathSearch {
 public:
  PathSearch(const Graph& g, const Color* vc, const Color* ec)
      : g_(g), vc_(vc), ec_(ec) {}

  /// visit(path) returns true to stop; search returns true if stopped.
  template <class Visit>
  bool search(Vertex source, Vertex target, Visit&& visit) {
    source_ = source;
    target_ = target;
    path_.clear();
    path_.push_back(source);
    return step(source, kUnassigned, VertexSet{1} << source, visit);
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  template <class Visit>
  bool step(Vertex x, Color in, VertexSet visited, Visit& visit) {
    const bool internal = x != source_;
    for (VertexSet nb = g_.neighbours(x) & ~visited; nb; nb &= nb - 1) {
      const Vertex y = std::countr_zero(nb);
      const Color out = ec_[g_.edge_id(x, y)];
      if (internal &&
          (!differ<Wildcard>(in, out) || !differ<Wildcard>(vc_[x], out))) {
        continue;
      }
      if (y == target_) {
        path_.push_back(y);
        if (visit(path_)) return true;
        path_.pop_back();
        continue;
      }
      // y becomes internal: its color must differ from the edge entering it
      // and from the previous internal vertex.
      if (!differ<Wildcard>(vc_[y], out)) continue;
      if (internal && !differ<Wildcard>(vc_[x], vc_[y])) continue;
      path_.push_back(y);
      if (step(y, out, visited | (VertexSet{1} << y), visit)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const Color* vc_;
  const Color* ec_;
  Vertex source_ = 0;
  Vertex target_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace tpc::detail
