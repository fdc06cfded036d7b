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

// Brute-force ground truth for small orders: every labelled graph is
// certified and bucketed by isomorphism class.

#ifndef MIXEXT_ORACLE_HPP
#define MIXEXT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mixext/canon.hpp"
#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/graph.hpp"
#include "mixext/parallel.hpp"
#include "mixext/spectral.hpp"

namespace mixext {

inline constexpr std::size_t kOracleMaxOrder = 7;
inline constexpr std::size_t kOracleStretchOrder = 8;

struct OracleOptions {
  std::size_t jobs = 1;
  bool allow_stretch = false;  // permits order 8 via one-vertex extension
};

struct IsoClass {
  Graph representative;  // labelled member with the smallest edge mask
  CanonicalCert certificate;
  std::uint64_t labelled_count = 0;  // 0 when the class was reached by extension
};

/// Graph whose pair (i, j), i < j, is an edge iff bit k of mask is set, where
/// pairs are numbered column by column as in graph6.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) b.add_edge(i, j);
  return b.build();
}

namespace detail {

inline void check_oracle_order(std::size_t n, const OracleOptions& opt) {
  const std::size_t limit = opt.allow_stretch ? kOracleStretchOrder : kOracleMaxOrder;
  if (n > limit)
    throw CapacityError("oracle order " + std::to_string(n) + " exceeds " + std::to_string(limit) +
                        (opt.allow_stretch ? "" : " (order 8 needs the stretch flag)"));
}

using ClassMap = std::map<CanonicalCert, std::pair<std::uint64_t, std::uint64_t>>;  // cert -> (count, min mask)

inline std::vector<IsoClass> labelled_classes(std::size_t n, std::size_t jobs) {
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::size_t split_bits = std::min<std::size_t>(pairs, 6);
  const std::uint64_t chunks = std::uint64_t{1} << split_bits;
  const std::uint64_t per_chunk = total / chunks;

  auto partial = parallel_map(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    ClassMap local;
    const std::uint64_t lo = c * per_chunk;
    for (std::uint64_t mask = lo; mask < lo + per_chunk; ++mask) {
      auto cert = canonical_form(graph_from_mask(n, mask), n);
      auto [it, inserted] = local.try_emplace(std::move(cert), 0, mask);
      ++it->second.first;
      it->second.second = std::min(it->second.second, mask);
    }
    return local;
  });

  ClassMap merged;
  for (auto& local : partial)
    for (auto& [cert, cm] : local) {
      auto [it, inserted] = merged.try_emplace(cert, 0, cm.second);
      it->second.first += cm.first;
      it->second.second = std::min(it->second.second, cm.second);
    }

  std::vector<IsoClass> out;
  out.reserve(merged.size());
  for (auto& [cert, cm] : merged) out.push_back({graph_from_mask(n, cm.second), cert, cm.first});
  return out;
}

/// Order-n classes from order-(n-1) classes by adding one vertex in every possible way.
inline std::vector<IsoClass> extended_classes(const std::vector<IsoClass>& smaller, std::size_t jobs) {
  if (smaller.empty()) return {};
  const std::size_t m = smaller.front().representative.order();
  const std::size_t n = m + 1;
  auto partial = parallel_map(smaller.size(), jobs, [&](std::size_t c) {
    std::map<CanonicalCert, Graph> local;
    const Graph& base = smaller[c].representative;
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
      GraphBuilder b(n);
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v)
          if (base.adjacent(u, v)) b.add_edge(u, v);
      for (std::size_t u = 0; u < m; ++u)
        if ((nb >> u) & 1U) b.add_edge(u, m);
      Graph g = b.build();
      local.try_emplace(canonical_form(g, n), std::move(g));
    }
    return local;
  });
  std::map<CanonicalCert, Graph> merged;
  for (auto& local : partial)
    for (auto& [cert, g] : local) merged.try_emplace(cert, g);
  std::vector<IsoClass> out;
  for (auto& [cert, g] : merged) out.push_back({g, cert, 0});
  return out;
}

}  // namespace detail

/// Isomorphism classes of graphs of order n, sorted by certificate. Orders up
/// to 7 are enumerated from all 2^C(n,2) labelled graphs with per-class
/// labelled counts; order 8 (stretch) extends the order-7 classes.
class GraphAtlas {
 public:
  explicit GraphAtlas(OracleOptions opt = {}) : opt_(opt) {}

  const std::vector<IsoClass>& classes(std::size_t n) {
    detail::check_oracle_order(n, opt_);
    auto it = classes_.find(n);
    if (it != classes_.end()) return it->second;
    std::vector<IsoClass> list;
    if (n <= kOracleMaxOrder) {
      list = detail::labelled_classes(n, opt_.jobs);
    } else {
      list = detail::extended_classes(classes(n - 1), opt_.jobs);
    }
    return classes_.emplace(n, std::move(list)).first->second;
  }

  /// Characteristic polynomials aligned with classes(n).
  const std::vector<IntPolynomial>& charpolys(std::size_t n) {
    auto it = polys_.find(n);
    if (it != polys_.end()) return it->second;
    const auto& list = classes(n);
    auto polys = parallel_map(list.size(), opt_.jobs,
                              [&](std::size_t i) { return char_poly_adjacency(list[i].representative); });
    return polys_.emplace(n, std::move(polys)).first->second;
  }

  const OracleOptions& options() const noexcept { return opt_; }

 private:
  OracleOptions opt_;
  std::map<std::size_t, std::vector<IsoClass>> classes_;
  std::map<std::size_t, std::vector<IntPolynomial>> polys_;
};

inline std::vector<Graph> all_graphs_up_to_iso(GraphAtlas& atlas, std::size_t n, bool connected_only) {
  std::vector<Graph> out;
  for (const auto& c : atlas.classes(n))
    if (!connected_only || component_count(c.representative) == 1) out.push_back(c.representative);
  return out;
}

inline std::vector<Graph> all_graphs_up_to_iso(std::size_t n, bool connected_only, const OracleOptions& opt = {}) {
  GraphAtlas atlas(opt);
  return all_graphs_up_to_iso(atlas, n, connected_only);
}

/// Class test by definition: no isolated vertices, all but three eigenvalues
/// in {0, -1}, two positive eigenvalues and one below -1.
inline bool in_gpp_by_definition(const Graph& g, const IntPolynomial& charpoly) {
  if (g.order() == 0 || isolated_count(g) != 0) return false;
  const auto v = signature_from_charpoly(charpoly, g.order());
  if (v.residual.degree() != 3) return false;
  const Bcd cubic{to_int64(-v.residual.coefficient(2)), to_int64(-v.residual.coefficient(1)),
                  to_int64(v.residual.coefficient(0))};
  const auto profile = cubic_sign_profile(cubic);
  const bool by_profile = profile.positive_roots == 2 && profile.has_root_below_minus_one;
  if (by_profile != v.in_gpp())
    throw ClassificationViolation("sign profile and signature test disagree on " + cubic.to_string());
  return by_profile;
}

inline std::set<CanonicalCert> gpp_members_bruteforce(GraphAtlas& atlas, std::size_t n) {
  std::set<CanonicalCert> out;
  const auto& list = atlas.classes(n);
  const auto& polys = atlas.charpolys(n);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (in_gpp_by_definition(list[i].representative, polys[i])) out.insert(list[i].certificate);
  return out;
}

inline std::set<CanonicalCert> gpp_members_bruteforce(std::size_t n, const OracleOptions& opt = {}) {
  GraphAtlas atlas(opt);
  return gpp_members_bruteforce(atlas, n);
}

/// All non-isomorphic graphs of the same order with the same characteristic polynomial.
inline std::vector<Graph> cospectral_mates_bruteforce(GraphAtlas& atlas, const Graph& g) {
  const std::size_t n = g.order();
  const auto cert = canonical_form(g, n);
  const auto poly = char_poly_adjacency(g);
  const auto& list = atlas.classes(n);
  const auto& polys = atlas.charpolys(n);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (polys[i] == poly && list[i].certificate != cert) out.push_back(list[i].representative);
  return out;
}

inline std::vector<Graph> cospectral_mates_bruteforce(const Graph& g, const OracleOptions& opt = {}) {
  GraphAtlas atlas(opt);
  return cospectral_mates_bruteforce(atlas, g);
}

}  // namespace mixext

#endif  // MIXEXT_ORACLE_HPP
