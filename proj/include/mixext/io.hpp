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

// CSV and JSON forms of census entries and pseudo-cospectral groups.

#ifndef MIXEXT_IO_HPP
#define MIXEXT_IO_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mixext/canon.hpp"
#include "mixext/census.hpp"
#include "mixext/error.hpp"
#include "mixext/families.hpp"
#include "mixext/graph6.hpp"

namespace mixext {

inline constexpr std::string_view kCensusCsvHeader = "b,c,d,family,p,q,r,s,n,cert_hex";
inline constexpr std::string_view kTable2CsvHeader = "b,c,d,family,p,q,r,s,n";

namespace detail {

inline std::string param_cells(const FamilyDescriptor& d) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ',';
    if (i < d.params.size()) s += std::to_string(d.params[i]);
  }
  return s;
}

inline std::string bcd_cells(const Bcd& k) {
  return std::to_string(k.b) + "," + std::to_string(k.c) + "," + std::to_string(k.d);
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline std::int64_t parse_int(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' on line " + std::to_string(line_no), line_no);
  }
}

/// Reads the shared leading columns b,c,d,family,p,q,r,s,n.
inline std::pair<SpectralSignature, FamilyDescriptor> parse_row_prefix(const std::vector<std::string>& cells,
                                                                       std::size_t line_no) {
  SpectralSignature sig;
  sig.bcd = Bcd{parse_int(cells[0], line_no), parse_int(cells[1], line_no), parse_int(cells[2], line_no)};
  FamilyDescriptor d;
  try {
    d.family = family_from_tag(cells[3]);
  } catch (const InvalidDescriptor& e) {
    throw ParseError(e.what(), line_no);
  }
  for (std::size_t i = 4; i < 8; ++i)
    if (!cells[i].empty()) d.params.push_back(static_cast<int>(parse_int(cells[i], line_no)));
  if (d.params.size() != param_count(d.family))
    throw ParseError("wrong parameter count on line " + std::to_string(line_no), line_no);
  sig.n = parse_int(cells[8], line_no);
  return {sig, d};
}

inline std::vector<std::string> data_lines(std::string_view text, std::string_view header) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      if (line != header) throw ParseError("unexpected CSV header '" + line + "'", 0);
      first = false;
      continue;
    }
    if (!line.empty()) lines.push_back(line);
  }
  if (first) throw ParseError("missing CSV header", 0);
  return lines;
}

}  // namespace detail

inline std::string census_to_csv(const std::vector<CensusEntry>& census) {
  std::string out(kCensusCsvHeader);
  out += '\n';
  for (const auto& e : census) {
    out += detail::bcd_cells(e.bcd()) + "," + std::string(family_tag(e.descriptor.family)) + "," +
           detail::param_cells(e.descriptor) + "," + std::to_string(e.signature.n) + "," + e.certificate.hex() + "\n";
  }
  return out;
}

inline std::vector<CensusEntry> census_from_csv(std::string_view text) {
  std::vector<CensusEntry> out;
  std::size_t line_no = 1;
  for (const auto& line : detail::data_lines(text, kCensusCsvHeader)) {
    ++line_no;
    const auto cells = detail::split_csv(line);
    if (cells.size() != 10) throw ParseError("expected 10 cells on line " + std::to_string(line_no), line_no);
    auto [sig, desc] = detail::parse_row_prefix(cells, line_no);
    out.push_back({std::move(desc), sig, CanonicalCert::from_hex(cells[9])});
  }
  return out;
}

/// One member row of a grouped table.
struct GroupRow {
  Bcd key;
  FamilyDescriptor descriptor;
  std::int64_t n = 0;

  friend bool operator==(const GroupRow&, const GroupRow&) = default;
  friend auto operator<=>(const GroupRow&, const GroupRow&) = default;

  std::string to_csv() const {
    return detail::bcd_cells(key) + "," + std::string(family_tag(descriptor.family)) + "," +
           detail::param_cells(descriptor) + "," + std::to_string(n);
  }
};

inline std::vector<GroupRow> group_rows(const std::vector<PseudoCospectralGroup>& groups) {
  std::vector<GroupRow> rows;
  for (const auto& g : groups)
    for (const auto& m : g.members) rows.push_back({g.key, m.descriptor, m.signature.n});
  return rows;
}

inline std::string groups_to_csv(const std::vector<PseudoCospectralGroup>& groups) {
  std::string out(kTable2CsvHeader);
  out += '\n';
  for (const auto& row : group_rows(groups)) out += row.to_csv() + "\n";
  return out;
}

inline std::vector<GroupRow> group_rows_from_csv(std::string_view text) {
  std::vector<GroupRow> out;
  std::size_t line_no = 1;
  for (const auto& line : detail::data_lines(text, kTable2CsvHeader)) {
    ++line_no;
    const auto cells = detail::split_csv(line);
    if (cells.size() != 9) throw ParseError("expected 9 cells on line " + std::to_string(line_no), line_no);
    auto [sig, desc] = detail::parse_row_prefix(cells, line_no);
    out.push_back({sig.bcd, std::move(desc), sig.n});
  }
  return out;
}

namespace detail {

inline nlohmann::ordered_json member_json(const CensusEntry& e) {
  nlohmann::ordered_json m;
  m["family"] = std::string(family_tag(e.descriptor.family));
  m["params"] = e.descriptor.params;
  m["n"] = e.signature.n;
  m["cert"] = e.certificate.hex();
  return m;
}

inline CensusEntry member_from_json(const nlohmann::json& m, const Bcd& key) {
  CensusEntry e;
  e.descriptor.family = family_from_tag(m.at("family").get<std::string>());
  e.descriptor.params = m.at("params").get<std::vector<int>>();
  if (e.descriptor.params.size() != param_count(e.descriptor.family))
    throw ParseError("wrong parameter count in JSON member", 0);
  e.signature = SpectralSignature{m.at("n").get<std::int64_t>(), key};
  e.certificate = CanonicalCert::from_hex(m.at("cert").get<std::string>());
  return e;
}

inline nlohmann::ordered_json key_json(const Bcd& k) {
  nlohmann::ordered_json j;
  j["b"] = k.b;
  j["c"] = k.c;
  j["d"] = k.d;
  return j;
}

inline Bcd key_from_json(const nlohmann::json& j) {
  return {j.at("b").get<std::int64_t>(), j.at("c").get<std::int64_t>(), j.at("d").get<std::int64_t>()};
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

}  // namespace detail

/// [{"key":{"b":..,"c":..,"d":..},"members":[{"family","params","n","cert"}]}]
inline std::string groups_to_json(const std::vector<PseudoCospectralGroup>& groups) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& g : groups) {
    nlohmann::ordered_json item;
    item["key"] = detail::key_json(g.key);
    item["members"] = nlohmann::ordered_json::array();
    for (const auto& m : g.members) item["members"].push_back(detail::member_json(m));
    arr.push_back(std::move(item));
  }
  return arr.dump(1) + "\n";
}

inline std::vector<PseudoCospectralGroup> groups_from_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  std::vector<PseudoCospectralGroup> out;
  try {
    for (const auto& item : j) {
      PseudoCospectralGroup g;
      g.key = detail::key_from_json(item.at("key"));
      for (const auto& m : item.at("members")) g.members.push_back(detail::member_from_json(m, g.key));
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return out;
}

/// Flat array of entries, each with its key inlined.
inline std::string census_to_json(const std::vector<CensusEntry>& census) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : census) {
    nlohmann::ordered_json item = detail::key_json(e.bcd());
    const auto member = detail::member_json(e);
    for (auto& [k, v] : member.items()) item[k] = v;
    arr.push_back(std::move(item));
  }
  return arr.dump(1) + "\n";
}

inline std::vector<CensusEntry> census_from_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  std::vector<CensusEntry> out;
  try {
    for (const auto& item : j) out.push_back(detail::member_from_json(item, detail::key_from_json(item)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  return out;
}

inline std::string census_to_graph6(const std::vector<CensusEntry>& census, const FamilyOptions& opt = {}) {
  std::string out;
  for (const auto& e : census) out += to_graph6(realize(e.descriptor, opt)) + "\n";
  return out;
}

inline std::string groups_to_graph6(const std::vector<PseudoCospectralGroup>& groups) {
  std::string out;
  for (const auto& g : groups)
    for (const auto& m : g.members) out += to_graph6(realize(m.descriptor)) + "\n";
  return out;
}

}  // namespace mixext

#endif  // MIXEXT_IO_HPP
