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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

/// graph6 encoding: size byte 63+n, then the upper triangle in column-major
/// order packed into 6-bit groups offset by 63. Requires n <= 62.
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. Trailing whitespace and an optional ">>graph6<<"
/// header are ignored. Throws Error(MalformedGraph6) or Error(SizeLimit).
Graph from_graph6(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace tpc
