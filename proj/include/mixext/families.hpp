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

// The families of connected and disconnected graphs with exactly two positive
// eigenvalues, one eigenvalue below -1 and all others in {0, -1}: tagged
// descriptors, closed-form cubic coefficients, realization, enumeration and
// the known cospectral constructions.

#ifndef MIXEXT_FAMILIES_HPP
#define MIXEXT_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/graph.hpp"
#include "mixext/polynomial.hpp"
#include "mixext/spectral.hpp"

namespace mixext {

/// Declaration order is the normalization preference order.
enum class Family : std::uint8_t {
  kP3PosPosPos,   // (p,q,r)
  kP3PosNegPos,   // (p,-q,r)
  kP3NegPosPos,   // (-p,q,r)
  kP3NegNegPos,   // (-p,-q,r)
  kP4TwoEnds,     // (-2,q,r,-2)
  kP4ThreeTwo,    // (-3,q,-2,s)
  kP4TwoTwoThree, // (-2,-2,-3,s)
  kP4Sporadic,    // (p,q,-r,s), (p,q,s) from a fixed list
  kP4Positive,    // eight fixed all-positive tuples
  kP5,            // (1,p,-q,r,1)
  kCliquePlusBipartite,  // K_p + K_{q,r}
  kCliquePlusSplit,      // K_p + CS_{q,r}
  kBipartite,     // K_{p,q}, improper
  kSplit,         // CS_{p,q}, improper
};

inline constexpr std::array<Family, 14> kAllFamilies{
    Family::kP3PosPosPos,  Family::kP3PosNegPos,       Family::kP3NegPosPos,      Family::kP3NegNegPos,
    Family::kP4TwoEnds,    Family::kP4ThreeTwo,        Family::kP4TwoTwoThree,    Family::kP4Sporadic,
    Family::kP4Positive,   Family::kP5,                Family::kCliquePlusBipartite, Family::kCliquePlusSplit,
    Family::kBipartite,    Family::kSplit};

inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::kP3PosPosPos: return "(p|q|r)";
    case Family::kP3PosNegPos: return "(p|-q|r)";
    case Family::kP3NegPosPos: return "(-p|q|r)";
    case Family::kP3NegNegPos: return "(-p|-q|r)";
    case Family::kP4TwoEnds: return "(-2|q|r|-2)";
    case Family::kP4ThreeTwo: return "(-3|q|-2|s)";
    case Family::kP4TwoTwoThree: return "(-2|-2|-3|s)";
    case Family::kP4Sporadic: return "(p|q|-r|s)";
    case Family::kP4Positive: return "(p|q|r|s)";
    case Family::kP5: return "(1|p|-q|r|1)";
    case Family::kCliquePlusBipartite: return "Kp+K(q|r)";
    case Family::kCliquePlusSplit: return "Kp+CS(q|r)";
    case Family::kBipartite: return "K(p|q)";
    case Family::kSplit: return "CS(p|q)";
  }
  return "?";
}

inline Family family_from_tag(std::string_view tag) {
  for (auto f : kAllFamilies)
    if (family_tag(f) == tag) return f;
  throw InvalidDescriptor("unknown family tag '" + std::string(tag) + "'");
}

inline bool is_proper_p3_family(Family f) noexcept { return f <= Family::kP3NegNegPos; }
inline bool is_p4_family(Family f) noexcept { return f >= Family::kP4TwoEnds && f <= Family::kP4Positive; }
inline bool is_path_family(Family f) noexcept { return f <= Family::kP5; }
inline bool is_improper_family(Family f) noexcept { return f == Family::kBipartite || f == Family::kSplit; }

inline std::size_t param_count(Family f) noexcept {
  if (is_p4_family(f)) return 4;
  if (is_improper_family(f)) return 2;
  return 3;
}

struct SporadicRow {
  int p, q, s;
  std::int64_t b, c1, c0, d1, d0;  // c = c1 r + c0, d = d1 r + d0
};

inline constexpr std::array<SporadicRow, 10> kSporadicRows{{
    {5, 2, 4, 8, 6, -9, 34, 18},
    {4, 2, 6, 9, 8, -15, 40, 25},
    {7, 2, 3, 9, 5, -6, 37, 16},
    {3, 3, 6, 9, 9, -15, 45, 25},
    {4, 3, 3, 7, 6, -4, 30, 12},
    {7, 3, 2, 9, 5, 1, 37, 9},
    {3, 4, 4, 8, 8, -9, 40, 18},
    {3, 6, 3, 9, 9, -6, 45, 16},
    {4, 6, 2, 9, 8, 1, 40, 9},
    {5, 4, 2, 8, 6, 1, 34, 8},
}};

struct PositiveRow {
  std::array<int, 4> t;
  Bcd bcd;
};

inline constexpr std::array<PositiveRow, 8> kPositiveRows{{
    {{2, 2, 2, 7}, {9, 1, 65}},
    {{2, 2, 6, 3}, {9, 9, 73}},
    {{2, 2, 3, 4}, {7, 5, 51}},
    {{2, 3, 2, 5}, {8, 1, 68}},
    {{2, 3, 4, 3}, {8, 7, 74}},
    {{2, 5, 2, 4}, {9, 1, 89}},
    {{3, 2, 2, 3}, {6, 3, 40}},
    {{2, 5, 3, 3}, {9, 6, 94}},
}};

inline const SporadicRow* find_sporadic(int p, int q, int s) {
  for (const auto& row : kSporadicRows)
    if (row.p == p && row.q == q && row.s == s) return &row;
  return nullptr;
}

inline const PositiveRow* find_positive(const std::array<int, 4>& t) {
  for (const auto& row : kPositiveRows)
    if (row.t == t) return &row;
  return nullptr;
}

struct FamilyOptions {
  bool include_cs_r1 = false;       // admit K_p + CS_{q,1} = K_p + K_{q+1}
  bool include_star_union = true;   // admit K_p + K_{1,r}, p, r >= 2
};

/// A family tag with its parameters, all stored as absolute part sizes.
/// P4 descriptors keep all four entries, e.g. (-2|q|r|-2) has params 2,q,r,2.
struct FamilyDescriptor {
  Family family = Family::kP3PosPosPos;
  std::vector<int> params;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
  friend auto operator<=>(const FamilyDescriptor&, const FamilyDescriptor&) = default;

  int param(std::size_t i) const {
    if (i >= params.size()) throw InvalidDescriptor("descriptor has too few parameters");
    return params[i];
  }

  std::string params_text() const {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params[i]);
    }
    return s;
  }

  /// "family=<tag> params=a,b,..."
  std::string to_text() const { return "family=" + std::string(family_tag(family)) + " params=" + params_text(); }

  /// Signed tuple of a path family.
  std::optional<SignedTuple> tuple() const {
    if (!is_path_family(family)) return std::nullopt;
    if (params.size() != param_count(family)) throw InvalidDescriptor("wrong parameter count for " + to_text());
    const auto& a = params;
    switch (family) {
      case Family::kP3PosPosPos: return SignedTuple{a[0], a[1], a[2]};
      case Family::kP3PosNegPos: return SignedTuple{a[0], -a[1], a[2]};
      case Family::kP3NegPosPos: return SignedTuple{-a[0], a[1], a[2]};
      case Family::kP3NegNegPos: return SignedTuple{-a[0], -a[1], a[2]};
      case Family::kP4TwoEnds: return SignedTuple{-a[0], a[1], a[2], -a[3]};
      case Family::kP4ThreeTwo: return SignedTuple{-a[0], a[1], -a[2], a[3]};
      case Family::kP4TwoTwoThree: return SignedTuple{-a[0], -a[1], -a[2], a[3]};
      case Family::kP4Sporadic: return SignedTuple{a[0], a[1], -a[2], a[3]};
      case Family::kP4Positive: return SignedTuple{a[0], a[1], a[2], a[3]};
      case Family::kP5: return SignedTuple{1, a[0], -a[1], a[2], 1};
      default: return std::nullopt;
    }
  }

  std::size_t order() const {
    if (auto t = tuple()) return t->order();
    std::size_t n = 0;
    for (int v : params) n += static_cast<std::size_t>(std::max(v, 0));
    return n;
  }

  static FamilyDescriptor parse(std::string_view text);
};

inline FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  constexpr std::string_view kFamily = "family=";
  constexpr std::string_view kParams = " params=";
  if (text.substr(0, kFamily.size()) != kFamily) throw ParseError("descriptor must start with family=", 0);
  const auto split = text.find(kParams);
  if (split == std::string_view::npos) throw ParseError("descriptor needs ' params='", text.size());
  FamilyDescriptor d;
  const auto tag = text.substr(kFamily.size(), split - kFamily.size());
  try {
    d.family = family_from_tag(tag);
  } catch (const InvalidDescriptor& e) {
    throw ParseError(e.what(), kFamily.size());
  }
  std::size_t pos = split + kParams.size();
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto tok = text.substr(pos, end - pos);
    if (tok.empty()) throw ParseError("empty parameter", pos);
    int v = 0;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw ParseError("parameters must be positive integers", pos + i);
      v = v * 10 + (tok[i] - '0');
      if (v > 1000000) throw ParseError("parameter too large", pos + i);
    }
    d.params.push_back(v);
    pos = end + 1;
  }
  if (d.params.size() != param_count(d.family))
    throw ParseError("family " + std::string(tag) + " takes " + std::to_string(param_count(d.family)) +
                         " parameters",
                     split + kParams.size());
  return d;
}

/// Parses a signed tuple such as "(-7,1,3)" or "-7,1,3".
inline SignedTuple parse_tuple(std::string_view text) {
  std::size_t pos = 0, end = text.size();
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis", text.size());
    pos = 1;
    end = text.size() - 1;
  }
  std::vector<int> entries;
  while (pos <= end) {
    std::size_t stop = text.find(',', pos);
    if (stop == std::string_view::npos || stop > end) stop = end;
    const auto tok = text.substr(pos, stop - pos);
    if (tok.empty()) throw ParseError("empty tuple entry", pos);
    std::size_t i = 0;
    bool neg = false;
    if (tok[0] == '-' || tok[0] == '+') {
      neg = tok[0] == '-';
      i = 1;
    }
    if (i == tok.size()) throw ParseError("missing digits", pos + i);
    long v = 0;
    for (; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw ParseError("tuple entries must be integers", pos + i);
      v = v * 10 + (tok[i] - '0');
      if (v > 1000000) throw ParseError("tuple entry too large", pos + i);
    }
    if (v == 0) throw ParseError("tuple entries must be nonzero", pos);
    entries.push_back(static_cast<int>(neg ? -v : v));
    pos = stop + 1;
  }
  return SignedTuple(std::move(entries));
}

/// Checks the parameter bounds of the family.
inline void validate(const FamilyDescriptor& d, const FamilyOptions& opt = {}) {
  const auto& a = d.params;
  if (a.size() != param_count(d.family)) throw InvalidDescriptor("wrong parameter count for " + d.to_text());
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvalidDescriptor(d.to_text() + ": " + what);
  };
  for (int v : a) require(v >= 1, "parameters must be positive");
  switch (d.family) {
    case Family::kP3PosPosPos:
    case Family::kP3PosNegPos:
    case Family::kP3NegPosPos:
    case Family::kP3NegNegPos: require(a[2] >= 2, "r must be at least 2"); break;
    case Family::kP4TwoEnds: require(a[0] == 2 && a[3] == 2, "end parts must be 2"); break;
    case Family::kP4ThreeTwo: require(a[0] == 3 && a[2] == 2, "parts 1 and 3 must be 3 and 2"); break;
    case Family::kP4TwoTwoThree: require(a[0] == 2 && a[1] == 2 && a[2] == 3, "leading parts must be 2,2,3"); break;
    case Family::kP4Sporadic: require(find_sporadic(a[0], a[1], a[3]) != nullptr, "(p,q,s) not a listed triple"); break;
    case Family::kP4Positive:
      require(find_positive({a[0], a[1], a[2], a[3]}) != nullptr, "not a listed tuple");
      break;
    case Family::kP5: break;
    case Family::kCliquePlusBipartite:
      require(a[0] >= 2 && a[2] >= 2, "p,r must be at least 2");
      require(a[1] >= 2 || (a[1] == 1 && opt.include_star_union), "q = 1 is excluded unless enabled");
      break;
    case Family::kCliquePlusSplit:
      require(a[0] >= 2 && a[1] >= 2, "p,q must be at least 2");
      require(a[2] >= 2 || opt.include_cs_r1, "r = 1 is excluded unless enabled");
      break;
    case Family::kBipartite: break;
    case Family::kSplit: require(a[0] >= 2, "clique part must be at least 2"); break;
  }
}

/// Closed-form coefficients (b, c, d).
inline Bcd bcd_formula(const FamilyDescriptor& desc, const FamilyOptions& opt = {}) {
  validate(desc, opt);
  std::array<std::int64_t, 4> v{};
  for (std::size_t i = 0; i < desc.params.size(); ++i) v[i] = desc.params[i];
  const std::int64_t p = v[0], q = v[1], r = v[2], s = v[3];
  switch (desc.family) {
    case Family::kP3NegNegPos: return {r - 1, p * q + q * r, p * q * (r - 1)};
    case Family::kP3NegPosPos: return {q + r - 2, q + r + p * q - 1, p * q * (r - 1)};
    case Family::kP3PosNegPos:
      return {p + r - 2, q * (p + r) + (p - 1) * (1 - r), q * r * (p - 1) + p * q * (r - 1)};
    case Family::kP3PosPosPos:
      return {p + q + r - 3, 2 * q + 2 * r + 2 * p - p * r - 3, q * p * r + p * r - p - q - r + 1};
    case Family::kP4TwoEnds: return {q + r - 1, 2 * q + 2 * r, 4 * q * r};
    case Family::kP4ThreeTwo: return {q + s - 1, 2 * s + 5 * q - q * s, 6 * q * s};
    case Family::kP4TwoTwoThree: return {s, 2 * s + 10, 12 * s};
    case Family::kP4Sporadic: {
      const auto* row = find_sporadic(desc.params[0], desc.params[1], desc.params[3]);
      return {row->b, row->c1 * r + row->c0, row->d1 * r + row->d0};
    }
    case Family::kP4Positive:
      return find_positive({desc.params[0], desc.params[1], desc.params[2], desc.params[3]})->bcd;
    case Family::kP5: return {p + r - 1, (q + 1) * (p + r) - p * r, p * r * (2 * q + 1)};
    case Family::kCliquePlusBipartite: return {p - 1, q * r, q * r * (p - 1)};
    case Family::kCliquePlusSplit: return {p + q - 2, q * r - (p - 1) * (q - 1), q * r * (p - 1)};
    case Family::kBipartite:
    case Family::kSplit: break;
  }
  throw ClassificationViolation(desc.to_text() + " has no closed-form cubic");
}

/// Quotient matrix of the natural equitable partition. Disconnected and
/// improper families use the block-diagonal matrix of their components.
inline IntMatrix quotient_matrix(const FamilyDescriptor& desc) {
  if (auto t = desc.tuple()) return quotient_matrix(*t);
  const auto& a = desc.params;
  if (a.size() != param_count(desc.family)) throw InvalidDescriptor("wrong parameter count for " + desc.to_text());
  switch (desc.family) {
    case Family::kCliquePlusBipartite: return IntMatrix{{a[0] - 1, 0, 0}, {0, 0, a[2]}, {0, a[1], 0}};
    case Family::kCliquePlusSplit: return IntMatrix{{a[0] - 1, 0, 0}, {0, a[1] - 1, a[2]}, {0, a[1], 0}};
    case Family::kBipartite: return IntMatrix{{0, a[1]}, {a[0], 0}};
    case Family::kSplit: return IntMatrix{{a[0] - 1, a[1]}, {a[0], 0}};
    default: break;
  }
  throw InvalidDescriptor("no quotient for " + desc.to_text());
}

/// (b, c, d) from the quotient characteristic polynomial.
inline Bcd bcd_from_quotient(const FamilyDescriptor& desc, const FamilyOptions& opt = {}) {
  validate(desc, opt);
  const auto cubic = residual_cubic(char_poly(quotient_matrix(desc)));
  if (!cubic) throw ClassificationViolation(desc.to_text() + ": quotient residual is not a cubic");
  return *cubic;
}

inline Graph realize(const FamilyDescriptor& desc, const FamilyOptions& opt = {}) {
  validate(desc, opt);
  if (auto t = desc.tuple()) return build_mixed_extension(*t);
  const auto& a = desc.params;
  switch (desc.family) {
    case Family::kCliquePlusBipartite: return disjoint_union(complete_graph(a[0]), complete_bipartite(a[1], a[2]));
    case Family::kCliquePlusSplit: return disjoint_union(complete_graph(a[0]), complete_split(a[1], a[2]));
    case Family::kBipartite: return complete_bipartite(a[0], a[1]);
    case Family::kSplit: return complete_split(a[0], a[1]);
    default: break;
  }
  throw InvalidDescriptor("cannot realize " + desc.to_text());
}

namespace detail {

struct Slot {
  int sign;   // +1 or -1; parts of size 1 match either sign
  int fixed;  // required absolute value, 0 for free
};

inline bool slot_matches(int entry, Slot s) {
  const int a = entry < 0 ? -entry : entry;
  if (s.fixed != 0 && a != s.fixed) return false;
  return a == 1 || (entry > 0 ? 1 : -1) == s.sign;
}

inline std::vector<int> abs_entries(const SignedTuple& t) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(static_cast<int>(t.part_size(i)));
  return out;
}

inline std::optional<FamilyDescriptor> match_oriented(const SignedTuple& t) {
  const auto a = abs_entries(t);
  auto fits = [&](std::initializer_list<Slot> slots) {
    if (slots.size() != t.size()) return false;
    std::size_t i = 0;
    for (auto s : slots)
      if (!slot_matches(t[i++], s)) return false;
    return true;
  };
  if (t.size() == 3) {
    if (!t.is_clique_part(2)) return std::nullopt;
    static constexpr std::array<std::pair<Family, std::array<int, 2>>, 4> kP3{{
        {Family::kP3PosPosPos, {1, 1}},
        {Family::kP3PosNegPos, {1, -1}},
        {Family::kP3NegPosPos, {-1, 1}},
        {Family::kP3NegNegPos, {-1, -1}},
    }};
    for (const auto& [f, signs] : kP3)
      if (fits({{signs[0], 0}, {signs[1], 0}, {1, 0}})) return FamilyDescriptor{f, a};
    return std::nullopt;
  }
  if (t.size() == 4) {
    if (fits({{-1, 2}, {1, 0}, {1, 0}, {-1, 2}})) return FamilyDescriptor{Family::kP4TwoEnds, a};
    if (fits({{-1, 3}, {1, 0}, {-1, 2}, {1, 0}})) return FamilyDescriptor{Family::kP4ThreeTwo, a};
    if (fits({{-1, 2}, {-1, 2}, {-1, 3}, {1, 0}})) return FamilyDescriptor{Family::kP4TwoTwoThree, a};
    if (fits({{1, 0}, {1, 0}, {-1, 0}, {1, 0}}) && find_sporadic(a[0], a[1], a[3]))
      return FamilyDescriptor{Family::kP4Sporadic, a};
    if (fits({{1, 0}, {1, 0}, {1, 0}, {1, 0}}) && find_positive({a[0], a[1], a[2], a[3]}))
      return FamilyDescriptor{Family::kP4Positive, a};
    return std::nullopt;
  }
  if (t.size() == 5) {
    if (fits({{1, 1}, {1, 0}, {-1, 0}, {1, 0}, {1, 1}}))
      return FamilyDescriptor{Family::kP5, {a[1], a[2], a[3]}};
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Classifies a path tuple under the normalization rules: both orientations
/// are matched against the family templates (parts of size 1 are sign-free),
/// the earliest family wins and ties go to the smaller parameter list. P3
/// tuples whose end parts both lack edges are the improper graphs K_{p,q} and
/// CS_{p,q}.
inline FamilyDescriptor classify_tuple(const SignedTuple& t) {
  if (t.size() == 3 && !t.is_clique_part(0) && !t.is_clique_part(2)) {
    const int mid = static_cast<int>(t.part_size(1));
    const int ends = static_cast<int>(t.part_size(0) + t.part_size(2));
    if (t.is_clique_part(1)) return FamilyDescriptor{Family::kSplit, {mid, ends}};
    return FamilyDescriptor{Family::kBipartite, {std::min(mid, ends), std::max(mid, ends)}};
  }
  std::optional<FamilyDescriptor> best;
  for (const auto& oriented : {t, t.reversed()}) {
    auto m = detail::match_oriented(oriented);
    if (m && (!best || *m < *best)) best = std::move(m);
  }
  if (!best) throw InvalidDescriptor("tuple " + t.to_string() + " is not in any listed family");
  return *best;
}

inline FamilyDescriptor normalize(const FamilyDescriptor& d) {
  if (auto t = d.tuple()) return classify_tuple(*t);
  FamilyDescriptor out = d;
  if (d.family == Family::kCliquePlusBipartite && out.params.size() == 3 && out.params[1] > out.params[2])
    std::swap(out.params[1], out.params[2]);
  if (d.family == Family::kBipartite && out.params.size() == 2 && out.params[0] > out.params[1])
    std::swap(out.params[0], out.params[1]);
  return out;
}

/// One row of the coefficient table: a family plus, for the sporadic rows,
/// the fixed entries.
struct Table1Row {
  Family family;
  std::vector<int> fixed;  // (p,q,s) for sporadic rows, the full tuple for positive rows

  std::string label() const {
    if (family == Family::kP4Sporadic)
      return "(" + std::to_string(fixed[0]) + "|" + std::to_string(fixed[1]) + "|-r|" + std::to_string(fixed[2]) + ")";
    if (family == Family::kP4Positive) {
      std::string s = "(";
      for (std::size_t i = 0; i < fixed.size(); ++i) s += (i ? "|" : "") + std::to_string(fixed[i]);
      return s + ")";
    }
    return std::string(family_tag(family));
  }
};

inline std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (auto f : {Family::kP3NegNegPos, Family::kP3NegPosPos, Family::kP3PosNegPos, Family::kP3PosPosPos,
                 Family::kP4TwoEnds, Family::kP4ThreeTwo, Family::kP4TwoTwoThree})
    rows.push_back({f, {}});
  for (const auto& r : kSporadicRows) rows.push_back({Family::kP4Sporadic, {r.p, r.q, r.s}});
  for (const auto& r : kPositiveRows) rows.push_back({Family::kP4Positive, {r.t.begin(), r.t.end()}});
  rows.push_back({Family::kP5, {}});
  rows.push_back({Family::kCliquePlusBipartite, {}});
  rows.push_back({Family::kCliquePlusSplit, {}});
  return rows;
}

/// Every in-bounds descriptor of the row whose free parameters are all at most
/// max_param and whose order is at most max_order. Not normalized.
inline std::vector<FamilyDescriptor> row_instances(const Table1Row& row, int max_param, std::size_t max_order,
                                                   const FamilyOptions& opt = {}) {
  std::vector<FamilyDescriptor> out;
  auto push = [&](Family f, std::vector<int> params) {
    FamilyDescriptor d{f, std::move(params)};
    if (d.order() <= max_order) out.push_back(std::move(d));
  };
  const int m = max_param;
  switch (row.family) {
    case Family::kP3PosPosPos:
    case Family::kP3PosNegPos:
    case Family::kP3NegPosPos:
    case Family::kP3NegNegPos:
    case Family::kP5:
      for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= m; ++q)
          for (int r = is_proper_p3_family(row.family) ? 2 : 1; r <= m; ++r) push(row.family, {p, q, r});
      break;
    case Family::kP4TwoEnds:
      for (int q = 1; q <= m; ++q)
        for (int r = 1; r <= m; ++r) push(row.family, {2, q, r, 2});
      break;
    case Family::kP4ThreeTwo:
      for (int q = 1; q <= m; ++q)
        for (int s = 1; s <= m; ++s) push(row.family, {3, q, 2, s});
      break;
    case Family::kP4TwoTwoThree:
      for (int s = 1; s <= m; ++s) push(row.family, {2, 2, 3, s});
      break;
    case Family::kP4Sporadic:
      for (int r = 1; r <= m; ++r) push(row.family, {row.fixed[0], row.fixed[1], r, row.fixed[2]});
      break;
    case Family::kP4Positive: push(row.family, row.fixed); break;
    case Family::kCliquePlusBipartite:
      for (int p = 2; p <= m; ++p)
        for (int q = opt.include_star_union ? 1 : 2; q <= m; ++q)
          for (int r = 2; r <= m; ++r) push(row.family, {p, q, r});
      break;
    case Family::kCliquePlusSplit:
      for (int p = 2; p <= m; ++p)
        for (int q = 2; q <= m; ++q)
          for (int r = opt.include_cs_r1 ? 1 : 2; r <= m; ++r) push(row.family, {p, q, r});
      break;
    case Family::kBipartite:
    case Family::kSplit: break;
  }
  return out;
}

/// All normalized descriptors of order at most max_order, without repeats,
/// sorted by family then parameters.
inline std::vector<FamilyDescriptor> enumerate_descriptors(std::size_t max_order, const FamilyOptions& opt = {}) {
  std::set<FamilyDescriptor> seen;
  const int m = static_cast<int>(max_order);
  for (const auto& row : table1_rows())
    for (auto& d : row_instances(row, m, max_order, opt)) seen.insert(normalize(d));
  return {seen.begin(), seen.end()};
}

/// A pair of descriptors with equal (b, c, d) from one of the known constructions.
struct DescriptorPair {
  FamilyDescriptor first;
  FamilyDescriptor second;
  std::string scheme;  // "4(i)", "4(ii)", "4(iii)", "5" or "6"
};

/// Pseudo-cospectral pairs of the three clique-union schemes, both members of
/// order at most max_order. The second member always has more vertices.
inline std::vector<DescriptorPair> prop4_pairs(std::size_t max_order) {
  std::vector<DescriptorPair> out;
  const int n = static_cast<int>(max_order);
  auto add = [&](const SignedTuple& t, FamilyDescriptor second, const char* scheme) {
    FamilyDescriptor first = classify_tuple(t);
    if (first.order() > max_order || second.order() > max_order) return;
    if (second.order() <= first.order())
      throw ClassificationViolation("second member of " + std::string(scheme) + " pair is not larger");
    out.push_back({std::move(first), normalize(second), scheme});
  };
  for (int p = 2; 2 * p <= n; ++p)
    for (int q = 1; 2 * p + q <= n; ++q)
      add(SignedTuple{p, -q, p}, {Family::kCliquePlusSplit, {p, p, 2 * q}}, "4(i)");
  for (int p = 3; 2 * p + (p - 1) * (p - 2) <= n; ++p)
    add(SignedTuple{p, (p - 1) * (p - 2), p}, {Family::kCliquePlusBipartite, {p * (p - 1), p - 1, p - 1}}, "4(ii)");
  for (int p = 2; 2 * p <= n; ++p)
    for (int q = 1; 2 * p + q <= n; ++q) {
      if ((p * q) % (p + q - 1) != 0) continue;
      const int r = 1 + p * q / (p + q - 1);
      add(SignedTuple{p, q, p}, {Family::kCliquePlusSplit, {p, p + q - 1, r}}, "4(iii)");
    }
  return out;
}

/// Pineapple K_{2p}^{p^2} and (p,-p,p) padded with p(p-1) isolated vertices.
struct PineapplePair {
  int p = 0;
  FamilyDescriptor pineapple_descriptor;  // (2p-1, 1, -p^2)
  FamilyDescriptor mate_descriptor;       // (p, -p, p)
  std::size_t padding = 0;
  Graph pineapple;
  Graph padded_mate;
};

inline PineapplePair prop5_pair(int p) {
  if (p < 2) throw InvalidDescriptor("pineapple pair needs p >= 2");
  PineapplePair out;
  out.p = p;
  out.pineapple_descriptor = classify_tuple(SignedTuple{2 * p - 1, 1, -p * p});
  out.mate_descriptor = classify_tuple(SignedTuple{p, -p, p});
  out.padding = static_cast<std::size_t>(p * (p - 1));
  out.pineapple = pineapple(2 * p, p * p);
  out.padded_mate = add_isolated(realize(out.mate_descriptor), out.padding);
  return out;
}

inline std::vector<PineapplePair> prop5_pairs(std::size_t max_order) {
  std::vector<PineapplePair> out;
  for (int p = 2; static_cast<std::size_t>(2 * p + p * p) <= max_order; ++p) out.push_back(prop5_pair(p));
  return out;
}

inline DescriptorPair prop5_descriptor_pair(int p) {
  auto pp = prop5_pair(p);
  return {pp.pineapple_descriptor, pp.mate_descriptor, "5"};
}

/// Connected cospectral pair (p,-q,r1), (-q,2q-1,r2) when q > p >= 1 and
/// r1 = q(2q-p-1)/(q-p) is an integer.
inline std::optional<DescriptorPair> prop6_pair(int p, int q) {
  if (p < 1 || q <= p) return std::nullopt;
  const int num = 2 * q - p - 1;
  if ((q * num) % (q - p) != 0) return std::nullopt;
  const int r1 = q * num / (q - p);
  const int r2 = p * num / (q - p);
  if ((p * num) % (q - p) != 0)
    throw ClassificationViolation("r1 integral but r2 not for p=" + std::to_string(p) + " q=" + std::to_string(q));
  return DescriptorPair{classify_tuple(SignedTuple{p, -q, r1}), classify_tuple(SignedTuple{-q, 2 * q - 1, r2}), "6"};
}

inline std::vector<DescriptorPair> prop6_pairs(std::size_t max_order) {
  std::vector<DescriptorPair> out;
  const int n = static_cast<int>(max_order);
  for (int q = 2; 3 * q - 1 <= n; ++q)
    for (int p = 1; p < q; ++p)
      if (auto pair = prop6_pair(p, q); pair && pair->first.order() <= max_order) out.push_back(std::move(*pair));
  return out;
}

/// K_{r,s} + k K_1, cospectral with K_{p,q} whenever rs = pq and r + s + k = p + q.
struct BipartiteWitness {
  int r = 0;
  int s = 0;
  std::size_t isolated = 0;

  Graph graph() const { return add_isolated(complete_bipartite(r, s), isolated); }
  std::string to_string() const {
    return "K(" + std::to_string(r) + "|" + std::to_string(s) + ")+" + std::to_string(isolated) + "K1";
  }
};

struct ImproperVerdict {
  bool ds = true;
  std::vector<BipartiteWitness> witnesses;
};

/// K_{p,q} is not determined by its spectrum iff pq has a divisor strictly
/// between p and q; CS_{p,q} with p, q >= 2 always is.
inline ImproperVerdict improper_analysis(const FamilyDescriptor& desc) {
  validate(desc);
  ImproperVerdict v;
  if (desc.family == Family::kSplit) {
    if (desc.params[1] < 2) throw InvalidDescriptor("CS(p|q) analysis needs q >= 2");
    return v;
  }
  if (desc.family != Family::kBipartite) throw InvalidDescriptor(desc.to_text() + " is not improper");
  const int lo = std::min(desc.params[0], desc.params[1]), hi = std::max(desc.params[0], desc.params[1]);
  const long long prod = static_cast<long long>(lo) * hi;
  std::set<std::pair<int, int>> seen;
  for (int r = lo + 1; r < hi; ++r) {
    if (prod % r != 0) continue;
    const int s = static_cast<int>(prod / r);
    const auto key = std::minmax(r, s);
    if (!seen.insert(key).second) continue;
    v.witnesses.push_back({key.first, key.second, static_cast<std::size_t>(lo + hi - r - s)});
  }
  v.ds = v.witnesses.empty();
  return v;
}

}  // namespace mixext

#endif  // MIXEXT_FAMILIES_HPP
