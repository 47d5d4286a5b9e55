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

#include <json.hpp>

#include "tpc/graph.hpp"
#include "tpc/solver.hpp"
#include "tpc/total_coloring.hpp"

namespace tpc {

using Json = nlohmann::ordered_json;

/// {"n": int, "vertex_colors": [int], "edge_colors": [[u, v, color]]}
Json coloring_to_json(const Graph& g, const TotalColoring& c);

/// Inverse of coloring_to_json. Every vertex and every edge of g must be
/// covered exactly once; color 0 is accepted as unassigned. Throws
/// Error(MalformedColoring).
TotalColoring coloring_from_json(const Graph& g, const Json& j);

/// {"graph6", "tpc", "status", "lower_reason", "witness", "pair_witnesses"}
/// plus "lower" and "nodes".
Json certificate_to_json(const TpcCertificate& cert);

/// Re-reads a certificate; the witness is validated against the graph only
/// structurally (use check_total_proper_connected to re-verify).
TpcCertificate certificate_from_json(const Json& j);

}  // namespace tpc
