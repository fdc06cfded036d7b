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

// Command implementations behind tools/mixext_cli.cpp. Each command returns
// its exit code and output text instead of writing to the terminal, which
// keeps them usable from tests.

#ifndef MIXEXT_CLI_HPP
#define MIXEXT_CLI_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixext/canon.hpp"
#include "mixext/census.hpp"
#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/families.hpp"
#include "mixext/graph.hpp"
#include "mixext/graph6.hpp"
#include "mixext/io.hpp"
#include "mixext/oracle.hpp"
#include "mixext/spectral.hpp"

namespace mixext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitMismatch = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs a command body and maps library exceptions onto exit codes.
template <class Fn>
CommandResult guarded(Fn&& body) {
  try {
    return body();
  } catch (const ClassificationViolation& e) {
    return {kExitMismatch, "", std::string("verification mismatch: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitInvalidInput, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kExitInvalidInput, "", std::string("invalid input: ") + e.what() + "\n"};
  }
}

/// Ways of naming a single graph on the command line. Exactly one must be set.
struct GraphSpec {
  std::optional<std::string> type;        // signed tuple, e.g. "-7,1,3"
  std::optional<std::string> descriptor;  // "family=<tag> params=..."
  std::optional<std::string> family;      // complete | bipartite | split | pineapple
  std::optional<std::string> graph6;
  int p = 0;
  int q = 1;
};

struct ResolvedGraph {
  Graph graph;
  std::optional<FamilyDescriptor> descriptor;
  std::string label;
};

inline ResolvedGraph resolve_graph(const GraphSpec& spec, const FamilyOptions& opt = {}) {
  const int given = spec.type.has_value() + spec.descriptor.has_value() + spec.family.has_value() +
                    spec.graph6.has_value();
  if (given != 1) throw InvalidDescriptor("give exactly one of --type, --descriptor, --family, --graph6");
  if (spec.type) {
    const SignedTuple t = parse_tuple(*spec.type);
    std::optional<FamilyDescriptor> d;
    try {
      d = classify_tuple(t);
    } catch (const InvalidDescriptor&) {
    }
    return {build_mixed_extension(t), d, t.to_string()};
  }
  if (spec.descriptor) {
    const auto d = normalize(FamilyDescriptor::parse(*spec.descriptor));
    return {realize(d, opt), d, d.to_text()};
  }
  if (spec.graph6) return {from_graph6(*spec.graph6), std::nullopt, *spec.graph6};
  const std::string& f = *spec.family;
  const std::string pq = "(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
  if (f == "complete") return {complete_graph(spec.p), std::nullopt, "K" + std::to_string(spec.p)};
  if (f == "bipartite") return {complete_bipartite(spec.p, spec.q), std::nullopt, "K" + pq};
  if (f == "split") return {complete_split(spec.p, spec.q), std::nullopt, "CS" + pq};
  if (f == "pineapple") return {pineapple(spec.p, spec.q), std::nullopt, "pineapple" + pq};
  throw InvalidDescriptor("unknown named family '" + f + "'");
}

inline std::string signature_line(const Graph& g) {
  const auto v = signature_from_charpoly(char_poly_adjacency(g), g.order());
  std::string s = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + " signature=";
  s += v.in_gpp() ? v.signature->to_string() : std::string("none (") + to_string(v.membership) + ")";
  return s + "\n";
}

inline CommandResult cmd_build(const GraphSpec& spec, const std::string& format, const FamilyOptions& opt = {}) {
  return guarded([&] {
    const auto r = resolve_graph(spec, opt);
    CommandResult res;
    if (format == "graph6")
      res.out = to_graph6(r.graph) + "\n";
    else if (format == "adjacency")
      res.out = adjacency_dump(r.graph);
    else
      throw InvalidDescriptor("unknown format '" + format + "'");
    res.out += signature_line(r.graph);
    return res;
  });
}

inline CommandResult cmd_poly(const GraphSpec& spec, const FamilyOptions& opt = {}) {
  return guarded([&] {
    const auto r = resolve_graph(spec, opt);
    return CommandResult{kExitOk, char_poly_adjacency(r.graph).to_text(), signature_line(r.graph)};
  });
}

struct CensusRequest {
  std::size_t max_n = 25;
  bool table2 = false;
  std::string format = "csv";
  std::size_t jobs = 1;
  FamilyOptions families;
};

inline CommandResult cmd_census(const CensusRequest& req) {
  return guarded([&] {
    if (req.format != "csv" && req.format != "json" && req.format != "graph6")
      throw InvalidDescriptor("unknown format '" + req.format + "'");
    CensusOptions opt;
    opt.jobs = req.jobs;
    opt.families = req.families;
    const auto census = build_census(req.max_n, opt);
    CommandResult res;
    if (req.table2) {
      const auto groups = table2_from_census(census, req.max_n);
      if (req.format == "csv") res.out = groups_to_csv(groups);
      if (req.format == "json") res.out = groups_to_json(groups);
      if (req.format == "graph6") res.out = groups_to_graph6(groups);
      res.err = "groups=" + std::to_string(groups.size()) + " rows=" + std::to_string(group_rows(groups).size()) + "\n";
    } else {
      if (req.format == "csv") res.out = census_to_csv(census);
      if (req.format == "json") res.out = census_to_json(census);
      if (req.format == "graph6") res.out = census_to_graph6(census, req.families);
      res.err = "entries=" + std::to_string(census.size()) + "\n";
    }
    return res;
  });
}

namespace detail {

inline nlohmann::ordered_json poly_json(const IntPolynomial& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return coeffs;
}

}  // namespace detail

struct DsRequest {
  std::optional<std::string> type;
  std::optional<std::string> descriptor;
  std::optional<std::pair<int, int>> bipartite;
  std::optional<std::pair<int, int>> split;
  std::size_t jobs = 1;
  FamilyOptions families;
};

inline CommandResult ds_improper(const FamilyDescriptor& d) {
  const auto verdict = improper_analysis(d);
  const Graph g = realize(d);
  const auto poly = char_poly_adjacency(g);
  nlohmann::ordered_json j;
  j["subject"] = d.to_text();
  j["n"] = g.order();
  j["verdict"] = verdict.ds ? "DS" : "NotDS";
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : verdict.witnesses) {
    const Graph wg = w.graph();
    if (char_poly_adjacency(wg) != poly)
      throw ClassificationViolation(w.to_string() + " is not cospectral with " + d.to_text());
    if (canonical_form(wg, kHardMaxOrder) == canonical_form(g, kHardMaxOrder))
      throw ClassificationViolation(w.to_string() + " is isomorphic to " + d.to_text());
    nlohmann::ordered_json item;
    item["graph"] = w.to_string();
    item["n"] = wg.order();
    item["padding"] = w.isolated;
    item["charpoly"] = detail::poly_json(poly);
    j["witnesses"].push_back(std::move(item));
  }
  return {kExitOk, j.dump(1) + "\n", ""};
}

inline CommandResult cmd_ds(const DsRequest& req) {
  return guarded([&] {
    const int given = req.type.has_value() + req.descriptor.has_value() + req.bipartite.has_value() +
                      req.split.has_value();
    if (given != 1) throw InvalidDescriptor("give exactly one of --type, --descriptor, --bipartite, --split");
    FamilyDescriptor d;
    if (req.type) d = classify_tuple(parse_tuple(*req.type));
    if (req.descriptor) d = normalize(FamilyDescriptor::parse(*req.descriptor));
    if (req.bipartite) d = normalize({Family::kBipartite, {req.bipartite->first, req.bipartite->second}});
    if (req.split) d = {Family::kSplit, {req.split->first, req.split->second}};
    if (is_improper_family(d.family)) return ds_improper(d);

    CensusOptions opt;
    opt.jobs = req.jobs;
    opt.families = req.families;
    const auto verdict = ds_decision(d, opt);
    nlohmann::ordered_json j;
    j["subject"] = verdict.subject.to_text();
    j["n"] = verdict.subject.order();
    j["verdict"] = verdict.ds ? "DS" : "NotDS";
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : verdict.witnesses) {
      nlohmann::ordered_json item;
      item["descriptor"] = w.entry.descriptor.to_text();
      item["n"] = w.entry.signature.n;
      item["padding"] = w.padding;
      item["charpoly"] = detail::poly_json(w.charpoly);
      j["witnesses"].push_back(std::move(item));
    }
    return CommandResult{kExitOk, j.dump(1) + "\n", ""};
  });
}

inline CommandResult cmd_verify_table1(int max_param, std::size_t jobs, const FamilyOptions& opt = {}) {
  return guarded([&] {
    if (max_param < 2) throw InvalidDescriptor("--max-param must be at least 2");
    const auto reports = verify_table1(max_param, jobs, opt);
    CommandResult res;
    std::size_t checked = 0, failed = 0;
    for (const auto& r : reports) {
      res.out += r.row.label() + " checked=" + std::to_string(r.checked) + " skipped=" + std::to_string(r.skipped) +
                 " mismatches=" + std::to_string(r.failures.size()) + "\n";
      for (const auto& f : r.failures) {
        res.out += "  mismatch " + f.descriptor.to_text() + " formula=" + f.formula.to_string() +
                   " quotient=" + (f.quotient ? f.quotient->to_string() : "none") +
                   " adjacency=" + (f.adjacency ? f.adjacency->to_string() : "none") + "\n";
      }
      checked += r.checked;
      failed += r.failures.size();
    }
    res.out += "rows=" + std::to_string(reports.size()) + " checked=" + std::to_string(checked) +
               " mismatches=" + std::to_string(failed) + "\n";
    if (failed) res.exit_code = kExitMismatch;
    return res;
  });
}

struct OracleRequest {
  std::size_t n = 7;
  bool connected_only = false;
  bool gpp_only = false;
  bool check_census = false;
  OracleOptions options;
  FamilyOptions families;
};

/// One line per class: graph6, then the characteristic polynomial
/// coefficients, constant first.
inline CommandResult cmd_oracle(const OracleRequest& req) {
  return guarded([&] {
    GraphAtlas atlas(req.options);
    CommandResult res;
    std::optional<std::vector<CensusEntry>> census;
    if (req.check_census) {
      CensusOptions copt;
      copt.jobs = req.options.jobs;
      copt.families = req.families;
      census = build_census(req.n, copt);
    }
    bool mismatch = false;
    const auto& list = atlas.classes(req.n);
    const auto& polys = atlas.charpolys(req.n);
    const auto members = gpp_members_bruteforce(atlas, req.n);
    std::uint64_t labelled = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      labelled += list[i].labelled_count;
      const Graph& g = list[i].representative;
      if (req.connected_only && component_count(g) != 1) continue;
      if (req.gpp_only && !members.count(list[i].certificate)) continue;
      res.out += to_graph6(g);
      for (const auto& c : polys[i].coefficients()) res.out += " " + c.str();
      res.out += "\n";
    }
    res.err = "n=" + std::to_string(req.n) + " classes=" + std::to_string(list.size()) +
              " gpp=" + std::to_string(members.size());
    if (req.n <= kOracleMaxOrder) res.err += " labelled=" + std::to_string(labelled);
    res.err += "\n";
    if (census) {
      std::set<CanonicalCert> fromCensus;
      for (const auto& e : *census)
        if (e.order() == req.n) fromCensus.insert(e.certificate);
      mismatch = fromCensus != members;
      res.err += std::string("census-check=") + (mismatch ? "MISMATCH" : "equal") +
                 " census=" + std::to_string(fromCensus.size()) + "\n";
    }
    if (mismatch) res.exit_code = kExitMismatch;
    return res;
  });
}

}  // namespace mixext::cli

#endif  // MIXEXT_CLI_HPP
