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

#include <cstdint>
#include <optional>
#include <string>

#include "tpc/graph.hpp"
#include "tpc/total_coloring.hpp"

namespace tpc {

enum class LowerReason { Complete, Noncomplete, Bridges };
enum class UpperReason { Complete, Traceable, SpanningTree, WitnessColoring };

std::string to_string(LowerReason r);
std::string to_string(UpperReason r);

/// Proven interval for tpc(G); upper_witness realises `upper`.
struct Bounds {
  int lower = 0;
  LowerReason lower_reason = LowerReason::Noncomplete;
  int upper = 0;
  UpperReason upper_reason = UpperReason::SpanningTree;
  TotalColoring upper_witness;
};

struct SolveBudget {
  std::int64_t node_limit = 200'000'000;  ///< color assignments per decide_k call
  std::int64_t path_step_limit = 2'000'000;  ///< Hamiltonian path extensions
  double wall_clock_hint_seconds = 0;  ///< informational only; limits are node based
  int prune_interval = 4;  ///< wildcard connectivity check every d assignments
};

/// lower: 1 for complete graphs, else max(3, b+1) with b the maximum number
/// of bridges at a vertex. upper: 1 for complete graphs, 3 if a Hamiltonian
/// path is found, otherwise max_degree(T)+1 for a low-degree spanning tree
/// T. Throws on disconnected input or n < 2.
Bounds compute_bounds(const Graph& g, const SolveBudget& budget = {});

enum class DecideStatus { Feasible, Infeasible, Timeout };

struct DecideResult {
  DecideStatus status;
  std::optional<TotalColoring> coloring;
  std::int64_t nodes = 0;
};

/// Backtracking over total colorings with at most k colors. Elements are
/// taken in DFS-tree order (each vertex right after its discovery edge,
/// back edges once both ends are placed). With canonical_colors an element
/// may only open color max_used+1. Partial assignments are pruned when some
/// pair has no total-proper path even treating unassigned elements as
/// wildcards.
DecideResult decide_k(const Graph& g, int k, const SolveBudget& budget = {},
                      bool canonical_colors = true);

enum class CertificateStatus { Exact, BoundsOnly, Timeout };
enum class LowerProof { BoundMatch, ExhaustedBelow };

std::string to_string(CertificateStatus s);
std::string to_string(LowerProof p);

struct TpcCertificate {
  Graph graph;
  int value = 0;  ///< tpc when Exact, otherwise the best upper bound
  int lower = 0;  ///< proven lower bound (== value when Exact)
  TotalColoring witness;
  PairWitnessMap pair_witnesses;
  LowerProof lower_reason = LowerProof::BoundMatch;
  CertificateStatus status = CertificateStatus::Exact;
  std::int64_t nodes = 0;
};

/// complete -> 1; traceable -> 3; bounds; then k = lower, lower+1, ... via
/// decide_k. Budget exhaustion yields Timeout when no search level was
/// completed and BoundsOnly when the interval was tightened.
TpcCertificate tpc_exact(const Graph& g, const SolveBudget& budget = {});

/// A total-proper coloring with at most k colors that gives g the strong
/// property, found by the same canonical backtracking as decide_k with the
/// strong-property test at the leaves.
DecideResult find_strong_coloring(const Graph& g, int k, const SolveBudget& budget = {});

/// Brute force over every coloring with colors 1..k (first-occurrence
/// ordered) for k = 1, 2, ...; no bounds, no pruning. Refuses graphs with
/// n + |E| > 16.
int naive_oracle_tpc(const Graph& g);

}  // namespace tpc
