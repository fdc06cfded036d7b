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

// Canonical certificates by twin reduction followed by individualization and
// refinement on the reduced graph.
//
// Vertices with equal closed neighbourhoods (true twins) or equal open
// neighbourhoods (false twins) form equivalence classes that every
// isomorphism maps onto classes of the same kind and size. Each class is
// collapsed into one labelled vertex, the labelled quotient is searched
// exhaustively, and every leaf is expanded back to a full labelling of the
// input. The certificate is the smallest expanded encoding.

#ifndef MIXEXT_CANON_HPP
#define MIXEXT_CANON_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "mixext/error.hpp"
#include "mixext/graph.hpp"

namespace mixext {

class CanonicalCert {
 public:
  CanonicalCert() = default;
  explicit CanonicalCert(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::size_t order() const noexcept { return bytes_.empty() ? 0 : bytes_[0]; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes_.size() * 2);
    for (auto b : bytes_) {
      s.push_back(kDigits[b >> 4]);
      s.push_back(kDigits[b & 15]);
    }
    return s;
  }

  static CanonicalCert from_hex(std::string_view text) {
    if (text.size() % 2 != 0) throw ParseError("certificate hex has odd length", text.size());
    auto nibble = [&](std::size_t i) -> std::uint8_t {
      const char c = text[i];
      if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
      if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
      throw ParseError("bad hex digit in certificate", i);
    };
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < text.size(); i += 2)
      out.push_back(static_cast<std::uint8_t>((nibble(i) << 4) | nibble(i + 1)));
    return CanonicalCert(std::move(out));
  }

  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalCertHash {
  std::size_t operator()(const CanonicalCert& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : c.bytes()) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};

namespace detail {

enum class TwinKind : std::uint8_t { kSingle = 0, kFalse = 1, kTrue = 2 };

struct TwinQuotient {
  std::vector<std::vector<std::size_t>> classes;  // member vertices, ascending
  std::vector<TwinKind> kind;
  std::vector<std::vector<bool>> adj;              // between classes
};

inline bool rows_equal_except(const Graph& g, std::size_t u, std::size_t v, bool closed) {
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return g.adjacent(u, v) == closed;
}

inline TwinQuotient twin_quotient(const Graph& g) {
  const std::size_t n = g.order();
  TwinQuotient q;
  std::vector<std::size_t> cls(n, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    if (cls[v] != SIZE_MAX) continue;
    cls[v] = q.classes.size();
    q.classes.push_back({v});
    q.kind.push_back(TwinKind::kSingle);
    for (std::size_t u = v + 1; u < n; ++u) {
      if (cls[u] != SIZE_MAX) continue;
      // A vertex cannot have both a true twin and a false twin.
      for (bool closed : {true, false}) {
        const TwinKind k = closed ? TwinKind::kTrue : TwinKind::kFalse;
        if (q.kind.back() != TwinKind::kSingle && q.kind.back() != k) continue;
        if (rows_equal_except(g, v, u, closed)) {
          cls[u] = cls[v];
          q.classes.back().push_back(u);
          q.kind.back() = k;
          break;
        }
      }
    }
  }
  const std::size_t r = q.classes.size();
  q.adj.assign(r, std::vector<bool>(r, false));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (a != b) q.adj[a][b] = g.adjacent(q.classes[a][0], q.classes[b][0]);
  return q;
}

class CanonSearch {
 public:
  explicit CanonSearch(TwinQuotient q) : q_(std::move(q)), r_(q_.classes.size()) {}

  std::vector<std::uint8_t> run() {
    std::vector<std::uint64_t> keys(r_);
    for (std::size_t v = 0; v < r_; ++v)
      keys[v] = (static_cast<std::uint64_t>(q_.kind[v]) << 32) | q_.classes[v].size();
    std::vector<std::size_t> colors = rank(keys);
    refine(colors);
    search(colors);
    return best_;
  }

 private:
  template <class Key>
  static std::vector<std::size_t> rank(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
      out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return out;
  }

  static std::size_t cell_count(const std::vector<std::size_t>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  void refine(std::vector<std::size_t>& colors) const {
    std::size_t cells = cell_count(colors);
    while (true) {
      std::vector<std::vector<std::size_t>> sig(r_);
      for (std::size_t v = 0; v < r_; ++v) {
        sig[v].push_back(colors[v]);
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < r_; ++u)
          if (q_.adj[v][u]) nb.push_back(colors[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      colors = rank(sig);
      const std::size_t next = cell_count(colors);
      if (next == cells) return;
      cells = next;
    }
  }

  void search(const std::vector<std::size_t>& colors) {
    const std::size_t cells = cell_count(colors);
    if (cells == r_) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> count(cells, 0);
    for (auto c : colors) ++count[c];
    std::size_t target = 0;
    while (count[target] < 2) ++target;
    for (std::size_t v = 0; v < r_; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::pair<std::size_t, int>> keys(r_);
      for (std::size_t u = 0; u < r_; ++u) keys[u] = {colors[u], u == v ? 0 : 1};
      std::vector<std::size_t> next = rank(keys);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<std::size_t>& colors) {
    std::vector<std::size_t> by_position(r_);
    for (std::size_t v = 0; v < r_; ++v) by_position[colors[v]] = v;
    std::vector<std::size_t> vertex_class;
    for (auto c : by_position)
      for (std::size_t i = 0; i < q_.classes[c].size(); ++i) vertex_class.push_back(c);
    const std::size_t n = vertex_class.size();
    std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n)};
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t a = vertex_class[i], b = vertex_class[j];
        const bool bit = a == b ? q_.kind[a] == TwinKind::kTrue : static_cast<bool>(q_.adj[a][b]);
        acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
        if (++filled == 8) {
          bytes.push_back(acc);
          acc = 0;
          filled = 0;
        }
      }
    if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    if (best_.empty() || bytes < best_) best_ = std::move(bytes);
  }

  TwinQuotient q_;
  std::size_t r_;
  std::vector<std::uint8_t> best_;
};

}  // namespace detail

/// Certificate bytes: the order, then the upper triangle (i < j, row-major) of
/// the canonically relabelled adjacency matrix, MSB first, zero padded.
inline CanonicalCert canonical_form(const Graph& g, std::size_t max_order = kDefaultMaxOrder) {
  if (g.order() > max_order)
    throw CapacityError("graph order " + std::to_string(g.order()) + " exceeds canonical-form limit " +
                        std::to_string(max_order));
  if (g.order() == 0) return CanonicalCert({0});
  detail::CanonSearch search(detail::twin_quotient(g));
  return CanonicalCert(search.run());
}

inline bool are_isomorphic(const Graph& a, const Graph& b, std::size_t max_order = kDefaultMaxOrder) {
  if (a.order() > max_order || b.order() > max_order)
    throw CapacityError("graph order exceeds canonical-form limit");
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace mixext

#endif  // MIXEXT_CANON_HPP
