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

#include <string>
#include <string_view>
#include <vector>

#include "tpc/graph.hpp"
#include "tpc/total_coloring.hpp"

namespace tpc {

enum class FamilyKind {
  Path,
  Cycle,
  Star,
  Complete,
  CompleteBipartite,
  DoubleStar,
  S4PlusE,
  C4PlusE,
  H1,
  H2,
  H3,
  H4,
  KstPlusV,
  HPrime,
  Theorem6,
};

/// A named graph family with its integer parameters.
///
/// Parameters by kind:
///   Path/Cycle/Star/Complete: {n}      CompleteBipartite: {s, t}
///   DoubleStar: {a, b}                 S4PlusE, C4PlusE: {}
///   H1..H4: {n}                        HPrime: {s}
///   KstPlusV: {s, t, side, index} where side 0 attaches v to u_index and
///     side 1 to w_index (1-based)
///   Theorem6: {n}
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

/// CLI names: path, cycle, star, complete, kst, double-star, s4e, c4e,
/// h1..h4, kst-plus-v, h-prime, thm6.
FamilySpec parse_family(std::string_view name, std::vector<int> params);
std::string family_name(FamilyKind kind);

/// Throws Error(InvalidFamily) for out-of-range parameters.
void validate(const FamilySpec& spec);

/// Deterministic labelled graph for spec.
///
/// Labelling conventions:
///   Star: centre 0. DoubleStar(a,b): centre of S_a is 0 with leaves 1..a-1,
///     centre of S_b is a with leaves a+1..a+b-1.
///   CompleteBipartite / KstPlusV / HPrime: u_i = i-1, w_j = s+j-1, v = s+t,
///     v' = s+3 (HPrime, with t = 2).
///   H1..H3: triangle u,v,w = 0,1,2; leaves of the bridges e_1, e_2, ... at
///     3, 4, ... (H2: x = 3 is the leaf of e_1 and carries the last leaf;
///     H3: the last leaf hangs off v).
///   H4: quadrangle u,v,w,x = 0,1,2,3; leaves of e_1..e_{n-4} at 4..n-1.
///   Theorem6: v = 0, u_i = i, w_j = |U| + j.
Graph build_family(const FamilySpec& spec);

struct ColoredGraph {
  Graph graph;
  TotalColoring coloring;
};

/// Proper total coloring with exactly max_degree+1 colors, greedy in BFS
/// order. Throws unless t is a tree on at least 3 vertices.
TotalColoring color_tree(const Graph& t);

/// Colors the alternating sequence v1, e1, v2, e2, ... of the Hamiltonian
/// path with 1, 2, 3, 1, ...; every other edge gets color 1.
TotalColoring color_traceable(const Graph& g, const PathWitness& ham);

enum class Side { U, W };

struct Attachment {
  Side side;
  int index;  ///< 1-based
};

/// K_{s,t} plus a vertex v joined to one vertex, colored with at most three
/// colors following the case analysis for s >= t >= 2:
///   t = 2, v on W: c(w1) = c(u1w2) = 1, c(w2) = c(u1w1) = 2, rest 3.
///   t = 2, v on U: c(w1) = c(u2) = c(u1w2) = 1,
///                  c(w2) = c(u1w1) = c(u2w1) = c(vu1) = 2, rest 3.
///   s = t = 3: Hamiltonian path coloring.
///   s >= 4: a 6-cycle u1w1u2w2u3w3 avoiding v's neighbour (if one exists)
///     colored along the cycle with 1,2,3; u_i and u3w_j get 1, w_j and
///     w1u_i get 2 (i, j >= 4); rest 3. Without such a cycle (t = 3 and v
///     on W) the same coloring with v's neighbour playing w2.
ColoredGraph color_lemma1(int s, int t, Attachment attachment);

/// K_{s,2} with v on w1 and v' on w2; the t = 2, v-on-W coloring with
/// c(v') = c(v'w2) = 3.
ColoredGraph color_h_prime(int s);

enum class UnicyclicVariant { H1, H2, H3, H4 };

/// Explicit colorings of H1 (n >= 5, n-2 colors) and H2 (n >= 6), H3, H4
/// (n >= 7) with n-3 colors. Below those orders the graphs are traceable or
/// need search. Throws Error(InvalidFamily) under the threshold.
ColoredGraph color_lemma2(UnicyclicVariant variant, int n);

int lemma2_min_order(UnicyclicVariant variant);

}  // namespace tpc
