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

#ifndef MIXEXT_GRAPH_HPP
#define MIXEXT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mixext/error.hpp"

namespace mixext {

inline constexpr std::size_t kDefaultMaxOrder = 64;
// Certificates store the order in a single byte.
inline constexpr std::size_t kHardMaxOrder = 255;

/// Finite simple graph stored as one bit row per vertex.
///
/// Values are immutable once built; use GraphBuilder or the free constructors
/// below to make new graphs.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return order_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::span<const std::uint64_t> row(std::size_t v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(std::size_t v) const noexcept {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < order_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(order_);
    for (std::size_t v = 0; v < order_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order) {
    if (order > kHardMaxOrder)
      throw CapacityError("graph order " + std::to_string(order) + " exceeds hard limit " +
                          std::to_string(kHardMaxOrder));
    g_.order_ = order;
    g_.words_ = (order + 63) / 64;
    g_.bits_.assign(g_.words_ * order, 0);
  }

  std::size_t order() const noexcept { return g_.order_; }

  GraphBuilder& add_edge(std::size_t u, std::size_t v) {
    if (u >= g_.order_ || v >= g_.order_) throw MalformedInput("edge endpoint out of range");
    if (u == v) throw MalformedInput("loops are not allowed");
    set(u, v);
    set(v, u);
    return *this;
  }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return g_.adjacent(u, v); }

  /// Makes every pair inside [first, last) adjacent.
  GraphBuilder& add_clique(std::size_t first, std::size_t last) {
    for (std::size_t u = first; u < last; ++u)
      for (std::size_t v = u + 1; v < last; ++v) add_edge(u, v);
    return *this;
  }

  /// Joins every vertex of [a0, a1) to every vertex of [b0, b1).
  GraphBuilder& add_join(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
    for (std::size_t u = a0; u < a1; ++u)
      for (std::size_t v = b0; v < b1; ++v) add_edge(u, v);
    return *this;
  }

  Graph build() const { return g_; }

 private:
  void set(std::size_t u, std::size_t v) { g_.bits_[u * g_.words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  Graph g_;
};

inline Graph empty_graph(std::size_t order) { return GraphBuilder(order).build(); }

inline Graph graph_from_edges(std::size_t order,
                              std::span<const std::pair<std::size_t, std::size_t>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph graph_from_edges(std::size_t order,
                              std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  return graph_from_edges(order, std::span<const std::pair<std::size_t, std::size_t>>(edges.begin(), edges.size()));
}

/// Ordered nonzero integers (t_1, ..., t_m): part i is a clique of order t_i when
/// t_i > 0 and a coclique of order -t_i when t_i < 0.
class SignedTuple {
 public:
  SignedTuple() = default;

  SignedTuple(std::initializer_list<int> entries) : SignedTuple(std::vector<int>(entries)) {}

  explicit SignedTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] == 0)
        throw InvalidDescriptor("tuple entry " + std::to_string(i) + " is zero");
  }

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  std::size_t part_size(std::size_t i) const noexcept {
    return static_cast<std::size_t>(entries_[i] < 0 ? -entries_[i] : entries_[i]);
  }

  /// True when part i carries internal edges (a clique of order at least 2).
  bool is_clique_part(std::size_t i) const noexcept { return entries_[i] > 1; }

  std::size_t order() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < size(); ++i) n += part_size(i);
    return n;
  }

  SignedTuple reversed() const {
    SignedTuple r;
    r.entries_.assign(entries_.rbegin(), entries_.rend());
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const SignedTuple&, const SignedTuple&) = default;
  friend auto operator<=>(const SignedTuple&, const SignedTuple&) = default;

 private:
  std::vector<int> entries_;
};

/// Mixed extension of the path P_m; parts occupy consecutive index ranges in tuple order.
inline Graph build_mixed_extension(const SignedTuple& tuple) {
  const std::size_t m = tuple.size();
  std::vector<std::size_t> start(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) start[i + 1] = start[i] + tuple.part_size(i);
  GraphBuilder b(start[m]);
  for (std::size_t i = 0; i < m; ++i) {
    if (tuple.is_clique_part(i)) b.add_clique(start[i], start[i + 1]);
    if (i + 1 < m) b.add_join(start[i], start[i + 1], start[i + 1], start[i + 2]);
  }
  return b.build();
}

inline Graph build_mixed_extension(std::size_t base_path_length, const SignedTuple& tuple) {
  if (base_path_length < 2) throw InvalidDescriptor("base path needs at least two vertices");
  if (tuple.size() != base_path_length)
    throw InvalidDescriptor("tuple " + tuple.to_string() + " does not have " +
                            std::to_string(base_path_length) + " entries");
  return build_mixed_extension(tuple);
}

namespace detail {
inline std::size_t positive(int value, const char* name) {
  if (value < 1) throw InvalidDescriptor(std::string(name) + " must be at least 1, got " + std::to_string(value));
  return static_cast<std::size_t>(value);
}
}  // namespace detail

inline Graph complete_graph(int p) {
  const auto n = detail::positive(p, "complete graph order");
  return GraphBuilder(n).add_clique(0, n).build();
}

inline Graph complete_bipartite(int p, int q) {
  const auto a = detail::positive(p, "bipartite side p");
  const auto b = detail::positive(q, "bipartite side q");
  return GraphBuilder(a + b).add_join(0, a, a, a + b).build();
}

/// CS_{p,q}: K_{p+q} with the edges of a K_q removed. Clique part first.
inline Graph complete_split(int p, int q) {
  const auto a = detail::positive(p, "split clique part p");
  const auto b = detail::positive(q, "split coclique part q");
  return GraphBuilder(a + b).add_clique(0, a).add_join(0, a, a, a + b).build();
}

/// Pineapple K_p^q: a K_p with q pendant vertices on one clique vertex.
inline Graph pineapple(int p, int q) {
  if (p < 2) throw InvalidDescriptor("pineapple clique order must be at least 2");
  detail::positive(q, "pineapple pendant count");
  return build_mixed_extension(SignedTuple{p - 1, 1, -q});
}

enum class NamedKind { kComplete, kCompleteBipartite, kCompleteSplit, kPineapple };

inline Graph named_graph(NamedKind kind, int p, int q = 1) {
  switch (kind) {
    case NamedKind::kComplete: return complete_graph(p);
    case NamedKind::kCompleteBipartite: return complete_bipartite(p, q);
    case NamedKind::kCompleteSplit: return complete_split(p, q);
    case NamedKind::kPineapple: return pineapple(p, q);
  }
  throw InvalidDescriptor("unknown named graph");
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = u + 1; v < n1; ++v)
      if (g1.adjacent(u, v)) b.add_edge(u, v);
  for (std::size_t u = 0; u < g2.order(); ++u)
    for (std::size_t v = u + 1; v < g2.order(); ++v)
      if (g2.adjacent(u, v)) b.add_edge(n1 + u, n1 + v);
  return b.build();
}

inline Graph add_isolated(const Graph& g, std::size_t k) { return disjoint_union(g, empty_graph(k)); }

/// Vertex v of g becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw MalformedInput("permutation size does not match graph order");
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) b.add_edge(perm[u], perm[v]);
  return b.build();
}

inline std::size_t isolated_count(const Graph& g) {
  std::size_t k = 0;
  for (std::size_t v = 0; v < g.order(); ++v) k += g.degree(v) == 0;
  return k;
}

inline Graph remove_isolated(const Graph& g) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(i, j);
  return b.build();
}

inline std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.order();
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) {
        auto a = find(u), c = find(v);
        if (a != c) {
          parent[a] = c;
          --comps;
        }
      }
  return comps;
}

inline std::size_t triangle_count(const Graph& g) {
  std::size_t t = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < g.words_per_row(); ++w)
        t += static_cast<std::size_t>(std::popcount(ru[w] & rv[w]));
    }
  return t / 3;
}

/// Debug dump: "n=<order> m=<edges>" then one "v: neighbors" line per vertex.
inline std::string adjacency_dump(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " m=" << g.edge_count() << '\n';
  for (std::size_t v = 0; v < g.order(); ++v) {
    out << v << ':';
    for (auto u : g.neighbors(v)) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

}  // namespace mixext

#endif  // MIXEXT_GRAPH_HPP
