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

#include "tpc/graph6.hpp"

#include <cstdint>

#include "tpc/error.hpp"

namespace tpc {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) {
    throw Error(ErrorCode::MalformedGraph6,
                "graph6: character code " +
                    std::to_string(static_cast<unsigned char>(c)) +
                    " outside 63..126");
  }
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) {
    throw Error(ErrorCode::SizeLimit, "graph6 writer supports n <= 62");
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "graph6: empty input");

  std::size_t pos = 0;
  std::int64_t n = sextet(text[pos++]);
  if (n == 63) {
    // Long forms: 126 + 3 sextets (n < 2^18), or 126 126 + 6 sextets.
    int groups = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      groups = 6;
    }
    if (text.size() < pos + groups) {
      throw Error(ErrorCode::MalformedGraph6, "graph6: truncated size field");
    }
    n = 0;
    for (int k = 0; k < groups; ++k) n = (n << 6) | sextet(text[pos++]);
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::SizeLimit,
                "graph6: order " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxOrder));
  }

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw Error(ErrorCode::MalformedGraph6,
                "graph6: expected " + std::to_string(need) +
                    " data characters, found " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int group = sextet(text[pos + k / 6]);
      if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Validate any padding-only characters too.
  for (std::size_t c = pos; c < text.size(); ++c) sextet(text[c]);
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line == kHeader) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace tpc
