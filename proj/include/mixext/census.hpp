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

#ifndef MIXEXT_CENSUS_HPP
#define MIXEXT_CENSUS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mixext/canon.hpp"
#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/families.hpp"
#include "mixext/graph.hpp"
#include "mixext/parallel.hpp"
#include "mixext/spectral.hpp"

namespace mixext {

struct CensusEntry {
  FamilyDescriptor descriptor;
  SpectralSignature signature;
  CanonicalCert certificate;

  std::size_t order() const noexcept { return static_cast<std::size_t>(signature.n); }
  const Bcd& bcd() const noexcept { return signature.bcd; }

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Census sort key: (b, c, d, n, descriptor text).
inline bool census_less(const CensusEntry& a, const CensusEntry& b) {
  return std::forward_as_tuple(a.signature.bcd, a.signature.n, a.descriptor.to_text()) <
         std::forward_as_tuple(b.signature.bcd, b.signature.n, b.descriptor.to_text());
}

struct CensusOptions {
  std::size_t jobs = 1;
  FamilyOptions families;
  std::size_t max_graph_order = kDefaultMaxOrder;
};

/// Builds, verifies and certifies one descriptor. The closed form, the
/// quotient and the full adjacency polynomial must all give the same (b, c, d).
inline CensusEntry make_census_entry(const FamilyDescriptor& desc, const CensusOptions& opt = {}) {
  const Graph g = realize(desc, opt.families);
  const Bcd formula = bcd_formula(desc, opt.families);
  CensusEntry e{desc, SpectralSignature{static_cast<std::int64_t>(g.order()), formula},
                canonical_form(g, opt.max_graph_order)};
  const bool boundary = desc.family == Family::kCliquePlusSplit && desc.params[2] == 1;
  if (boundary) return e;  // K_p + K_{q+1}: smallest eigenvalue -1, outside the class

  const Bcd quotient = bcd_from_quotient(desc, opt.families);
  if (quotient != formula)
    throw ClassificationViolation(desc.to_text() + ": closed form " + formula.to_string() + " but quotient gives " +
                                  quotient.to_string());
  const auto verdict = signature_from_charpoly(char_poly_adjacency(g), g.order());
  if (!verdict.in_gpp() || verdict.signature->bcd != formula)
    throw ClassificationViolation(desc.to_text() + ": adjacency polynomial does not give " + formula.to_string());
  return e;
}

/// Every class member of order at most max_order, one per isomorphism class,
/// sorted by (b, c, d, n, descriptor text). Identical for any job count.
inline std::vector<CensusEntry> build_census(std::size_t max_order, const CensusOptions& opt = {}) {
  if (max_order > opt.max_graph_order)
    throw CapacityError("census order " + std::to_string(max_order) + " exceeds the configured maximum " +
                        std::to_string(opt.max_graph_order));
  const auto descriptors = enumerate_descriptors(max_order, opt.families);
  auto entries =
      parallel_map(descriptors.size(), opt.jobs, [&](std::size_t i) { return make_census_entry(descriptors[i], opt); });
  std::sort(entries.begin(), entries.end(), census_less);
  std::unordered_set<CanonicalCert, CanonicalCertHash> seen;
  std::vector<CensusEntry> out;
  out.reserve(entries.size());
  for (auto& e : entries)
    if (seen.insert(e.certificate).second) out.push_back(std::move(e));
  return out;
}

struct PseudoCospectralGroup {
  Bcd key;
  std::vector<CensusEntry> members;  // sorted by order, then descriptor text

  bool has_proper_p3_member() const {
    return std::any_of(members.begin(), members.end(),
                       [](const CensusEntry& e) { return is_proper_p3_family(e.descriptor.family); });
  }
};

inline bool group_member_less(const CensusEntry& a, const CensusEntry& b) {
  return std::make_pair(a.signature.n, a.descriptor.to_text()) < std::make_pair(b.signature.n, b.descriptor.to_text());
}

/// Maximal runs of two or more entries with equal (b, c, d).
inline std::vector<PseudoCospectralGroup> pseudo_cospectral_groups(const std::vector<CensusEntry>& census,
                                                                   bool require_p3_member) {
  std::map<Bcd, std::vector<CensusEntry>> by_key;
  for (const auto& e : census) by_key[e.bcd()].push_back(e);
  std::vector<PseudoCospectralGroup> out;
  for (auto& [key, members] : by_key) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), group_member_less);
    PseudoCospectralGroup g{key, std::move(members)};
    if (require_p3_member && !g.has_proper_p3_member()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// Unordered descriptor pairs explained by the known constructions, both
/// members of order at most max_order.
inline std::set<std::pair<FamilyDescriptor, FamilyDescriptor>> known_pairs(std::size_t max_order) {
  std::set<std::pair<FamilyDescriptor, FamilyDescriptor>> out;
  auto add = [&](const FamilyDescriptor& a, const FamilyDescriptor& b) { out.insert(std::minmax(a, b)); };
  for (const auto& p : prop4_pairs(max_order)) add(p.first, p.second);
  for (int p = 2; static_cast<std::size_t>(2 * p + p * p) <= max_order; ++p) {
    const auto pp = prop5_descriptor_pair(p);
    add(pp.first, pp.second);
  }
  for (const auto& p : prop6_pairs(max_order)) add(p.first, p.second);
  return out;
}

/// Groups with a proper P3 member that keep at least two members after every
/// member taking part in a known pair inside the group is set aside. Surviving
/// groups are reported with all of their members.
inline std::vector<PseudoCospectralGroup> table2_from_census(const std::vector<CensusEntry>& census,
                                                             std::size_t max_order) {
  const auto pairs = known_pairs(max_order);
  std::vector<PseudoCospectralGroup> out;
  for (auto& g : pseudo_cospectral_groups(census, true)) {
    std::vector<bool> explained(g.members.size(), false);
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j)
        if (pairs.count(std::minmax(g.members[i].descriptor, g.members[j].descriptor)))
          explained[i] = explained[j] = true;
    if (std::count(explained.begin(), explained.end(), false) >= 2) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<PseudoCospectralGroup> table2(std::size_t max_order = 25, const CensusOptions& opt = {}) {
  return table2_from_census(build_census(max_order, opt), max_order);
}

/// The three independent (b, c, d) routes for one descriptor.
struct TripleCheck {
  FamilyDescriptor descriptor;
  Bcd formula;
  std::optional<Bcd> quotient;
  std::optional<Bcd> adjacency;
  bool skipped = false;  // boundary member outside the class, no cubic to compare

  bool ok() const { return skipped || (quotient == formula && adjacency == formula); }
};

inline TripleCheck triple_check(const FamilyDescriptor& desc, const FamilyOptions& opt = {}) {
  TripleCheck t{desc, bcd_formula(desc, opt), std::nullopt, std::nullopt, false};
  if (desc.family == Family::kCliquePlusSplit && desc.params[2] == 1) {
    t.skipped = true;
    return t;
  }
  t.quotient = residual_cubic(char_poly(quotient_matrix(desc)));
  const Graph g = realize(desc, opt);
  const auto v = signature_from_charpoly(char_poly_adjacency(g), g.order());
  if (v.in_gpp()) t.adjacency = v.signature->bcd;
  return t;
}

struct Table1RowReport {
  Table1Row row;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<TripleCheck> failures;
};

/// Triple equality over every row instance with free parameters at most max_param.
inline std::vector<Table1RowReport> verify_table1(int max_param, std::size_t jobs = 1, const FamilyOptions& opt = {}) {
  std::vector<Table1RowReport> reports;
  std::vector<std::pair<std::size_t, FamilyDescriptor>> work;
  for (const auto& row : table1_rows()) {
    reports.push_back({row, 0, 0, {}});
    for (auto& d : row_instances(row, max_param, kHardMaxOrder, opt)) work.emplace_back(reports.size() - 1, std::move(d));
  }
  const auto results = parallel_map(work.size(), jobs, [&](std::size_t i) { return triple_check(work[i].second, opt); });
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto& rep = reports[work[i].first];
    if (results[i].skipped) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    if (!results[i].ok()) rep.failures.push_back(results[i]);
  }
  return reports;
}

struct DsWitness {
  CensusEntry entry;
  std::size_t padding = 0;
  IntPolynomial charpoly;  // shared by the subject and the padded witness
};

struct DsVerdict {
  FamilyDescriptor subject;
  bool ds = true;
  std::vector<DsWitness> witnesses;
};

/// Decides whether a proper mixed extension of P3 is determined by its
/// spectrum. `census` must contain every class member of order at most the
/// subject's order; entries of larger order are ignored.
inline DsVerdict ds_decision(const FamilyDescriptor& desc, const std::vector<CensusEntry>& census,
                             const CensusOptions& opt = {}) {
  const FamilyDescriptor subject = normalize(desc);
  if (is_improper_family(subject.family))
    throw InvalidDescriptor(subject.to_text() + " is improper; use improper_analysis");
  if (!is_proper_p3_family(subject.family))
    throw InvalidDescriptor(subject.to_text() + " is not a proper mixed extension of P3");
  validate(subject, opt.families);
  const Graph g = realize(subject);
  const std::size_t n = g.order();
  const CanonicalCert cert = canonical_form(g, opt.max_graph_order);
  const Bcd key = bcd_formula(subject);
  const IntPolynomial poly = char_poly_adjacency(g);

  DsVerdict v{subject, true, {}};
  for (const auto& e : census) {
    if (e.bcd() != key || e.order() > n || e.certificate == cert) continue;
    const std::size_t pad = n - e.order();
    const IntPolynomial other = char_poly_adjacency(add_isolated(realize(e.descriptor, opt.families), pad));
    if (other != poly)
      throw ClassificationViolation("padded witness " + e.descriptor.to_text() + " is not cospectral with " +
                                    subject.to_text());
    v.witnesses.push_back({e, pad, poly});
  }
  v.ds = v.witnesses.empty();
  return v;
}

inline DsVerdict ds_decision(const FamilyDescriptor& desc, const CensusOptions& opt = {}) {
  const std::size_t n = normalize(desc).order();
  return ds_decision(desc, build_census(n, opt), opt);
}

}  // namespace mixext

#endif  // MIXEXT_CENSUS_HPP
