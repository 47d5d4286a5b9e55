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

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxEnumerationOrder = 8;

/// Isomorphism-class identifier: the graph6 string of the canonical
/// relabelling. Ordering is plain byte order, which for a fixed order n
/// agrees with ordering the adjacency bit strings.
struct CanonicalCode {
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  Graph graph;             ///< relabelled copy of the input
  std::vector<int> label;  ///< label[v] = new index of input vertex v
  CanonicalCode code;
};

/// Minimum adjacency bit string over all labellings compatible with an
/// isomorphism-invariant ordered degree partition (refined by neighbour
/// class counts). Exact; throws Error(SizeLimit) above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

using GraphFilter = std::function<bool(const Graph&)>;

/// One canonical representative per isomorphism class of graphs on n
/// vertices (connected or not), sorted by canonical code.
const std::vector<Graph>& all_graphs(int n);

/// Connected representatives satisfying filter, in canonical code order.
/// Throws Error(SizeLimit) for n > kMaxEnumerationOrder.
std::vector<Graph> enumerate_connected_graphs(int n, const GraphFilter& filter = {});

/// Trees on n vertices, one per class in canonical code order, grown leaf
/// by leaf. Works up to kMaxCanonicalOrder.
std::vector<Graph> enumerate_trees(int n);

/// Filter: complement is connected as well.
bool complement_connected(const Graph& g);

}  // namespace tpc
