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

#include "tpc/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>

#include "tpc/error.hpp"
#include "tpc/graph6.hpp"

namespace tpc {

namespace {

// Ordered partition of the vertices into classes that every isomorphism
// must preserve: start from degrees, split by the multiset of neighbour
// classes until stable. Class ids are ranks of sorted signatures, so they
// depend only on the isomorphism class.
std::vector<int> invariant_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(cls[v]);
      std::vector<int> nb;
      for (VertexSet s = g.neighbours(v); s; s &= s - 1) {
        nb.push_back(cls[std::countr_zero(s)]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      cls[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return cls;
}

class Minimiser {
 public:
  explicit Minimiser(const Graph& g) : g_(g), n_(g.order()) {
    total_bits_ = n_ * (n_ - 1) / 2;
    auto cls = invariant_classes(g);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cls[a] < cls[b]; });
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && cls[order[j]] == cls[order[i]]) ++j;
      cells_.push_back({order.begin() + i, order.begin() + j});
      i = j;
    }
    label_.assign(n_, 0);
  }

  void run() { assign_cell(0, 0); }

  std::uint64_t best_code() const { return best_; }
  const std::vector<int>& best_label() const { return best_label_; }

 private:
  void assign_cell(std::size_t cell, int next_position) {
    if (cell == cells_.size()) {
      evaluate();
      return;
    }
    auto members = cells_[cell];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t k = 0; k < members.size(); ++k) {
        label_[members[k]] = next_position + static_cast<int>(k);
      }
      assign_cell(cell + 1, next_position + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  }

  void evaluate() {
    std::uint64_t code = 0;
    for (auto [a, b] : g_.edges()) {
      int i = label_[a], j = label_[b];
      if (i > j) std::swap(i, j);
      const int pair = j * (j - 1) / 2 + i;
      code |= std::uint64_t{1} << (total_bits_ - 1 - pair);
    }
    if (best_label_.empty() || code < best_) {
      best_ = code;
      best_label_ = label_;
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> label_;
  std::uint64_t best_ = 0;
  std::vector<int> best_label_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::SizeLimit,
                "canonical form supports n <= " + std::to_string(kMaxCanonicalOrder));
  }
  if (g.order() == 0) return {g, {}, {to_graph6(g)}};
  Minimiser m(g);
  m.run();
  Graph relabelled = g.relabelled(m.best_label());
  CanonicalCode code{to_graph6(relabelled)};
  return {std::move(relabelled), m.best_label(), std::move(code)};
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

const std::vector<Graph>& all_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::SizeLimit,
                "enumeration supports 0 <= n <= " +
                    std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> cache;
  static std::array<bool, kMaxEnumerationOrder + 1> ready{};
  {
    std::lock_guard lock(mutex);
    if (ready[n]) return cache[n];
  }
  std::vector<Graph> result;
  if (n <= 1) {
    result.push_back(Graph(n));
  } else {
    // Every graph on n vertices is a graph on n-1 vertices plus one vertex
    // joined to some subset.
    const auto& smaller = all_graphs(n - 1);
    std::map<CanonicalCode, Graph> seen;
    for (const Graph& base : smaller) {
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      const std::size_t base_size = edges.size();
      for (VertexSet subset = 0; subset < (VertexSet{1} << (n - 1)); ++subset) {
        edges.resize(base_size);
        for (VertexSet s = subset; s; s &= s - 1) {
          edges.push_back({std::countr_zero(s), n - 1});
        }
        auto form = canonical_form(Graph(n, edges));
        seen.try_emplace(std::move(form.code), std::move(form.graph));
      }
    }
    for (auto& [code, graph] : seen) result.push_back(std::move(graph));
  }
  std::lock_guard lock(mutex);
  if (!ready[n]) {
    cache[n] = std::move(result);
    ready[n] = true;
  }
  return cache[n];
}

std::vector<Graph> enumerate_connected_graphs(int n, const GraphFilter& filter) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n)) {
    if (!is_connected(g)) continue;
    if (filter && !filter(g)) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::SizeLimit,
                "tree enumeration supports 1 <= n <= " + std::to_string(kMaxCanonicalOrder));
  }
  if (n == 1) return {Graph(1)};
  std::map<CanonicalCode, Graph> seen;
  for (const Graph& base : enumerate_trees(n - 1)) {
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (Vertex v = 0; v < n - 1; ++v) {
      edges.push_back({v, n - 1});
      auto form = canonical_form(Graph(n, edges));
      seen.try_emplace(std::move(form.code), std::move(form.graph));
      edges.pop_back();
    }
  }
  std::vector<Graph> out;
  for (auto& [code, tree] : seen) out.push_back(std::move(tree));
  return out;
}

bool complement_connected(const Graph& g) { return is_connected(complement(g)); }

}  // namespace tpc
