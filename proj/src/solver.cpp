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

#include "tpc/solver.hpp"

#include <algorithm>

#include "path_search.hpp"
#include "tpc/error.hpp"
#include "tpc/families.hpp"

namespace tpc {

std::string to_string(LowerReason r) {
  switch (r) {
    case LowerReason::Complete:
      return "complete";
    case LowerReason::Noncomplete:
      return "noncomplete>=3";
    case LowerReason::Bridges:
      return "bridges(b+1)";
  }
  return "?";
}

std::string to_string(UpperReason r) {
  switch (r) {
    case UpperReason::Complete:
      return "complete";
    case UpperReason::Traceable:
      return "traceable(3)";
    case UpperReason::SpanningTree:
      return "spanning-tree(delta+1)";
    case UpperReason::WitnessColoring:
      return "witness-coloring(k)";
  }
  return "?";
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Exact:
      return "Exact";
    case CertificateStatus::BoundsOnly:
      return "BoundsOnly";
    case CertificateStatus::Timeout:
      return "Timeout";
  }
  return "?";
}

std::string to_string(LowerProof p) {
  return p == LowerProof::BoundMatch ? "bound-match" : "exhausted-k-minus-1";
}

namespace {

void require_solvable(const Graph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::InvalidArgument, "tpc needs at least two vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "tpc is defined for connected graphs only");
  }
}

/// Colors of the spanning tree carried over; every other edge gets color 1.
TotalColoring extend_from_subgraph(const Graph& g, const Graph& sub,
                                   const TotalColoring& sub_coloring) {
  TotalColoring c(g, 1);
  c.vertex_colors = sub_coloring.vertex_colors;
  for (int id = 0; id < sub.size(); ++id) {
    const Edge& e = sub.edge(id);
    c.set_edge(g, e.u, e.v, sub_coloring.edge_colors[id]);
  }
  return c;
}

struct Element {
  bool is_vertex;
  int index;  // vertex or edge id
};

std::vector<Element> dfs_element_order(const Graph& g) {
  const int n = g.order();
  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  std::vector<Element> order;
  VertexSet placed = 0;
  auto place = [&](Vertex v) {
    order.push_back({true, v});
    for (VertexSet back = g.neighbours(v) & placed; back; back &= back - 1) {
      // The discovery edge is already in the order; add the rest.
      const int id = g.edge_id(v, std::countr_zero(back));
      bool present = false;
      for (const Element& e : order) present |= !e.is_vertex && e.index == id;
      if (!present) order.push_back({false, id});
    }
    placed |= VertexSet{1} << v;
  };
  std::vector<Vertex> stack;
  auto visit = [&](auto&& self, Vertex x) -> void {
    for (VertexSet nb = g.neighbours(x); nb; nb &= nb - 1) {
      const Vertex y = std::countr_zero(nb);
      if (placed & (VertexSet{1} << y)) continue;
      order.push_back({false, g.edge_id(x, y)});
      place(y);
      self(self, y);
    }
  };
  place(root);
  visit(visit, root);
  return order;
}

class Decider {
 public:
  using Accept = bool (*)(const Graph&, const TotalColoring&);

  Decider(const Graph& g, int k, const SolveBudget& budget, bool canonical,
          Accept accept = nullptr)
      : g_(g),
        accept_(accept),
        k_(k),
        budget_(budget),
        canonical_(canonical),
        order_(dfs_element_order(g)),
        coloring_(g),
        search_(g, coloring_.vertex_colors.data(), coloring_.edge_colors.data()) {
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
    cache_.resize(pairs_.size());
  }

  DecideResult run() {
    if (k_ < 1) return {DecideStatus::Infeasible, std::nullopt, 0};
    const bool found = assign(0, 0);
    if (found) return {DecideStatus::Feasible, coloring_, nodes_};
    return {timed_out_ ? DecideStatus::Timeout : DecideStatus::Infeasible, std::nullopt,
            nodes_};
  }

 private:
  Color& slot(const Element& e) {
    return e.is_vertex ? coloring_.vertex_colors[e.index] : coloring_.edge_colors[e.index];
  }

  bool assign(std::size_t position, int max_used) {
    if (position == order_.size()) return !accept_ || accept_(g_, coloring_);
    Color& target = slot(order_[position]);
    const int limit = canonical_ ? std::min(k_, max_used + 1) : k_;
    const bool check = (position + 1) % budget_.prune_interval == 0 ||
                       position + 1 == order_.size();
    for (Color col = 1; col <= limit; ++col) {
      if (++nodes_ > budget_.node_limit) {
        timed_out_ = true;
        break;
      }
      target = col;
      if (check && !feasible()) continue;
      if (assign(position + 1, std::max(max_used, col))) return true;
      if (timed_out_) break;
    }
    target = kUnassigned;
    return false;
  }

  // Wildcard connectivity: cached witnesses are re-validated first; the most
  // recently failing pair is tried before the others.
  bool feasible() {
    const Color* vc = coloring_.vertex_colors.data();
    const Color* ec = coloring_.edge_colors.data();
    const std::size_t count = pairs_.size();
    for (std::size_t step = 0; step < count; ++step) {
      const std::size_t i = (last_failure_ + step) % count;
      auto& cached = cache_[i];
      if (!cached.empty() && detail::proper_sequence<true>(g_, vc, ec, cached)) continue;
      const bool ok = search_.search(pairs_[i].first, pairs_[i].second,
                                     [](const std::vector<Vertex>&) { return true; });
      if (!ok) {
        cached.clear();
        last_failure_ = i;
        return false;
      }
      cached = search_.path();
    }
    return true;
  }

  const Graph& g_;
  Accept accept_;
  int k_;
  SolveBudget budget_;
  bool canonical_;
  std::vector<Element> order_;
  TotalColoring coloring_;
  detail::PathSearch<true> search_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::vector<Vertex>> cache_;
  std::size_t last_failure_ = 0;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

Bounds compute_bounds(const Graph& g, const SolveBudget& budget) {
  require_solvable(g);
  Bounds b;
  if (g.is_complete()) {
    b.lower = b.upper = 1;
    b.lower_reason = LowerReason::Complete;
    b.upper_reason = UpperReason::Complete;
    b.upper_witness = TotalColoring(g, 1);
    return b;
  }
  b.lower = 3;
  b.lower_reason = LowerReason::Noncomplete;
  const int bridge_degree = max_bridge_degree(g);
  if (bridge_degree + 1 > b.lower) {
    b.lower = bridge_degree + 1;
    b.lower_reason = LowerReason::Bridges;
  }

  auto ham = find_hamiltonian_path(g, budget.path_step_limit);
  if (ham.status == SearchStatus::Found) {
    b.upper = 3;
    b.upper_reason = UpperReason::Traceable;
    b.upper_witness = color_traceable(g, *ham.path);
    return b;
  }
  Graph tree = low_degree_spanning_tree(g);
  b.upper = tree.max_degree() + 1;
  b.upper_reason = UpperReason::SpanningTree;
  b.upper_witness = extend_from_subgraph(g, tree, color_tree(tree));
  return b;
}

DecideResult decide_k(const Graph& g, int k, const SolveBudget& budget,
                      bool canonical_colors) {
  require_solvable(g);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "color count must be at least 1");
  if (budget.node_limit <= 0 || budget.prune_interval <= 0) {
    throw Error(ErrorCode::InvalidArgument, "solve budget limits must be positive");
  }
  return Decider(g, k, budget, canonical_colors).run();
}

DecideResult find_strong_coloring(const Graph& g, int k, const SolveBudget& budget) {
  require_solvable(g);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "color count must be at least 1");
  return Decider(g, k, budget, true, [](const Graph& h, const TotalColoring& c) {
           return has_strong_property(h, c);
         }).run();
}

TpcCertificate tpc_exact(const Graph& g, const SolveBudget& budget) {
  Bounds bounds = compute_bounds(g, budget);
  TpcCertificate cert;
  cert.graph = g;
  cert.lower = bounds.lower;
  cert.value = bounds.upper;
  cert.witness = bounds.upper_witness;
  cert.lower_reason = LowerProof::BoundMatch;
  cert.status = CertificateStatus::Exact;

  for (int k = bounds.lower; k < bounds.upper; ++k) {
    DecideResult r = decide_k(g, k, budget);
    cert.nodes += r.nodes;
    if (r.status == DecideStatus::Feasible) {
      cert.value = k;
      cert.witness = std::move(*r.coloring);
      break;
    }
    if (r.status == DecideStatus::Timeout) {
      cert.status = k == bounds.lower ? CertificateStatus::Timeout
                                      : CertificateStatus::BoundsOnly;
      break;
    }
    cert.lower = k + 1;
    cert.lower_reason = LowerProof::ExhaustedBelow;
  }
  if (cert.status == CertificateStatus::Exact) cert.lower = cert.value;
  cert.pair_witnesses = check_total_proper_connected(g, cert.witness).witnesses;
  return cert;
}

int naive_oracle_tpc(const Graph& g) {
  require_solvable(g);
  const int elements = g.order() + g.size();
  if (elements > 16) {
    throw Error(ErrorCode::SizeLimit, "naive oracle refuses n + |E| > 16");
  }
  for (int k = 1;; ++k) {
    // Odometer over vertices then edges; digit i ranges over colors
    // 1..min(k, 1 + max of earlier digits).
    std::vector<Color> digits(elements, 1);
    while (true) {
      TotalColoring c(g);
      std::copy(digits.begin(), digits.begin() + g.order(), c.vertex_colors.begin());
      std::copy(digits.begin() + g.order(), digits.end(), c.edge_colors.begin());
      if (is_total_proper_connected(g, c)) return k;

      int i = elements - 1;
      for (; i >= 0; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, digits[j]);
        if (digits[i] < std::min(k, prefix_max + 1)) {
          ++digits[i];
          std::fill(digits.begin() + i + 1, digits.end(), 1);
          break;
        }
      }
      if (i < 0) break;
    }
  }
}

}  // namespace tpc
