// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph6 encoding (B. McKay's format): N(n) followed by the upper triangle of the
// adjacency matrix in column order, six bits per printable byte.

#ifndef MIXEXT_GRAPH6_HPP
#define MIXEXT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "mixext/error.hpp"
#include "mixext/graph.hpp"

namespace mixext {

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto take = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6 string ends early", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
    ++pos;
    return c - 63;
  };

  std::size_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') throw ParseError("graph6 orders above 258047 are not supported", pos);
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(take());
  } else {
    n = static_cast<std::size_t>(take());
  }
  if (n > kHardMaxOrder) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds hard limit");

  GraphBuilder b(n);
  int acc = 0, left = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        acc = take();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) b.add_edge(i, j);
    }
  if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", pos);
  return b.build();
}

}  // namespace mixext

#endif  // MIXEXT_GRAPH6_HPP
