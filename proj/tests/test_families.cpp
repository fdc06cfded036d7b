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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "mixext/canon.hpp"
#include "mixext/charpoly.hpp"
#include "mixext/families.hpp"
#include "mixext/spectral.hpp"
#include "support/oracles.hpp"

using namespace mixext;

namespace {

FamilyDescriptor desc(Family f, std::vector<int> params) { return {f, std::move(params)}; }

Bcd expanded_bcd(const Graph& g) {
  const auto s = oracle::signature_by_expansion(g);
  EXPECT_TRUE(s.has_value());
  return s ? Bcd{s->b, s->c, s->d} : Bcd{};
}

}  // namespace

TEST(Formula, ClosedFormExamples) {
  EXPECT_EQ(bcd_formula(desc(Family::kP3NegNegPos, {3, 2, 4})), (Bcd{3, 14, 18}));
  EXPECT_EQ(bcd_formula(desc(Family::kP4Positive, {2, 2, 2, 7})), (Bcd{9, 1, 65}));
  EXPECT_EQ(bcd_formula(desc(Family::kP4TwoTwoThree, {2, 2, 3, 5})), (Bcd{5, 20, 60}));
}

TEST(Formula, PositivePathAgainstExpansion) {
  const auto d = desc(Family::kP3PosPosPos, {2, 3, 4});
  EXPECT_EQ(bcd_formula(d), (Bcd{6, 7, 24}));
  EXPECT_EQ(expanded_bcd(realize(d)), (Bcd{6, 7, 24}));
}

TEST(Formula, QuotientExamples) {
  EXPECT_EQ(bcd_from_quotient(desc(Family::kP3NegPosPos, {2, 3, 2})), (Bcd{3, 10, 6}));
  EXPECT_EQ(bcd_from_quotient(desc(Family::kP5, {1, 3, 2})), (Bcd{2, 10, 14}));
  EXPECT_EQ(bcd_from_quotient(desc(Family::kP4TwoTwoThree, {2, 2, 3, 5})), (Bcd{5, 20, 60}));
}

TEST(Formula, ThreeTwoRowAtUnitParameters) {
  const auto d = desc(Family::kP4ThreeTwo, {3, 1, 2, 1});
  EXPECT_EQ(bcd_formula(d), (Bcd{1, 6, 6}));
  const Graph g = realize(d);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(expanded_bcd(g), (Bcd{1, 6, 6}));
}

TEST(Formula, AllRowsAgainstExpansionOnSmallGrid) {
  for (const auto& row : table1_rows())
    for (const auto& d : row_instances(row, 4, 12)) {
      if (d.family == Family::kCliquePlusSplit && d.params[2] == 1) continue;
      EXPECT_EQ(bcd_formula(d), expanded_bcd(realize(d))) << d.to_text();
    }
}

TEST(Realize, Examples) {
  auto sig = [](const Graph& g) {
    return signature_from_charpoly(char_poly_adjacency(g), g.order()).signature.value().to_string();
  };
  EXPECT_EQ(sig(realize(desc(Family::kCliquePlusSplit, {2, 3, 4}))), "(9,3,10,12)");
  EXPECT_EQ(sig(realize(classify_tuple(SignedTuple{-7, 1, 3}))), "(11,2,10,14)");
  const auto d = classify_tuple(SignedTuple{5, 2, -1, 4});
  EXPECT_EQ(d.family, Family::kP4Sporadic);
  EXPECT_EQ(bcd_formula(d), (Bcd{8, -3, 52}));
  EXPECT_EQ(sig(realize(d)), "(12,8,-3,52)");
}

TEST(Table1, RowCountAndLabels) {
  const auto rows = table1_rows();
  EXPECT_EQ(rows.size(), 28u);
  std::set<std::string> labels;
  for (const auto& r : rows) labels.insert(r.label());
  EXPECT_EQ(labels.size(), 28u);
  EXPECT_TRUE(labels.count("(2|2|2|7)"));
  EXPECT_TRUE(labels.count("(5|2|-r|4)"));
}

TEST(Table1, FixedRowHasOneInstance) {
  for (const auto& r : table1_rows()) {
    if (r.label() != "(2|2|2|7)") continue;
    const auto inst = row_instances(r, 6, 64);
    ASSERT_EQ(inst.size(), 1u);
    EXPECT_EQ(bcd_formula(inst[0]), (Bcd{9, 1, 65}));
    EXPECT_EQ(inst[0].order(), 13u);
  }
}

TEST(Normalize, UnitSignsAndOrientation) {
  EXPECT_EQ(classify_tuple(SignedTuple{-1, 3, 2}), classify_tuple(SignedTuple{1, 3, 2}));
  EXPECT_EQ(classify_tuple(SignedTuple{2, -1, 3}), classify_tuple(SignedTuple{2, 1, 3}));
  EXPECT_EQ(classify_tuple(SignedTuple{4, -2, 1}), desc(Family::kP3PosNegPos, {1, 2, 4}));
  EXPECT_EQ(classify_tuple(SignedTuple{3, 1, -7}), desc(Family::kP3NegPosPos, {7, 1, 3}));
  EXPECT_EQ(classify_tuple(SignedTuple{1, 2, -3, 1, 1}), desc(Family::kP5, {1, 3, 2}));
}

TEST(Normalize, OverlapsGiveEqualValues) {
  for (int q = 1; q <= 6; ++q)
    for (int r = 2; r <= 6; ++r) {
      EXPECT_EQ(bcd_formula(desc(Family::kP3NegPosPos, {1, q, r})), bcd_formula(desc(Family::kP3PosPosPos, {1, q, r})));
      EXPECT_EQ(bcd_formula(desc(Family::kP3PosNegPos, {q, 1, r})), bcd_formula(desc(Family::kP3PosPosPos, {q, 1, r})));
    }
}

TEST(Normalize, ImproperTuples) {
  EXPECT_TRUE(is_improper_family(classify_tuple(SignedTuple{-2, 1, -3}).family));
  EXPECT_EQ(classify_tuple(SignedTuple{-2, 1, -3}), desc(Family::kBipartite, {1, 5}));
  EXPECT_EQ(classify_tuple(SignedTuple{-2, 3, -4}), desc(Family::kSplit, {3, 6}));
  EXPECT_THROW(classify_tuple(SignedTuple{2, 2, 2, 2, 2}), InvalidDescriptor);
}

TEST(Descriptor, TextRoundTrip) {
  for (const auto& d : enumerate_descriptors(12)) EXPECT_EQ(FamilyDescriptor::parse(d.to_text()), d);
  EXPECT_EQ(desc(Family::kCliquePlusSplit, {2, 3, 4}).to_text(), "family=Kp+CS(q|r) params=2,3,4");
  EXPECT_THROW(FamilyDescriptor::parse("family=(p|q|r) params=1,2"), ParseError);
  EXPECT_THROW(FamilyDescriptor::parse("family=(x) params=1"), ParseError);
  EXPECT_THROW(FamilyDescriptor::parse("params=1,2,3"), ParseError);
}

TEST(Descriptor, TupleParsing) {
  EXPECT_EQ(parse_tuple("(-7,1,3)"), (SignedTuple{-7, 1, 3}));
  EXPECT_EQ(parse_tuple("-7,1,3"), (SignedTuple{-7, 1, 3}));
  EXPECT_THROW(parse_tuple("0,1,2"), ParseError);
  EXPECT_THROW(parse_tuple("1,,2"), ParseError);
  EXPECT_THROW(parse_tuple("(1,2"), ParseError);
}

TEST(Descriptor, Bounds) {
  EXPECT_THROW(validate(desc(Family::kP3PosPosPos, {1, 1, 1})), InvalidDescriptor);
  EXPECT_THROW(validate(desc(Family::kCliquePlusSplit, {2, 3, 1})), InvalidDescriptor);
  FamilyOptions boundary;
  boundary.include_cs_r1 = true;
  EXPECT_NO_THROW(validate(desc(Family::kCliquePlusSplit, {2, 3, 1}), boundary));
  EXPECT_NO_THROW(validate(desc(Family::kCliquePlusBipartite, {2, 1, 3})));
  FamilyOptions literal;
  literal.include_star_union = false;
  EXPECT_THROW(validate(desc(Family::kCliquePlusBipartite, {2, 1, 3}), literal), InvalidDescriptor);
  EXPECT_THROW(bcd_formula(desc(Family::kSplit, {1, 3})), InvalidDescriptor);
}

TEST(Descriptor, BoundaryMemberIsOutsideTheClass) {
  FamilyOptions boundary;
  boundary.include_cs_r1 = true;
  const Graph g = realize(desc(Family::kCliquePlusSplit, {2, 3, 1}), boundary);
  EXPECT_FALSE(signature_from_charpoly(char_poly_adjacency(g), g.order()).in_gpp());
}

TEST(Descriptor, StarUnionIsInTheClass) {
  const Graph g = realize(desc(Family::kCliquePlusBipartite, {3, 1, 4}));
  const auto v = signature_from_charpoly(char_poly_adjacency(g), g.order());
  ASSERT_TRUE(v.in_gpp());
  EXPECT_EQ(v.signature->bcd, bcd_formula(desc(Family::kCliquePlusBipartite, {3, 1, 4})));
}

TEST(Enumerate, SmallestPositivePath) {
  std::vector<FamilyDescriptor> p3;
  for (const auto& d : enumerate_descriptors(4))
    if (d.family == Family::kP3PosPosPos) p3.push_back(d);
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_EQ(p3[0], desc(Family::kP3PosPosPos, {1, 1, 2}));
  EXPECT_TRUE(enumerate_descriptors(3).empty());
}

TEST(Enumerate, SortedUniqueNormalized) {
  const auto all = enumerate_descriptors(16);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<FamilyDescriptor>(all.begin(), all.end()).size(), all.size());
  for (const auto& d : all) {
    EXPECT_EQ(normalize(d), d);
    EXPECT_LE(d.order(), 16u);
  }
}

TEST(Pairs, CliqueUnionSchemes) {
  const auto pairs = prop4_pairs(25);
  auto find = [&](const FamilyDescriptor& a) -> const DescriptorPair* {
    for (const auto& p : pairs)
      if (p.first == a) return &p;
    return nullptr;
  };
  const auto* i = find(desc(Family::kP3PosPosPos, {2, 1, 2}));
  ASSERT_NE(i, nullptr);
  EXPECT_EQ(i->scheme, "4(i)");
  EXPECT_EQ(i->second, desc(Family::kCliquePlusSplit, {2, 2, 2}));
  EXPECT_EQ(i->first.order(), 5u);
  EXPECT_EQ(i->second.order(), 6u);
  EXPECT_EQ(bcd_formula(i->first), bcd_formula(i->second));
  EXPECT_EQ(bcd_formula(i->first), (Bcd{2, 3, 4}));

  const auto* ii = find(desc(Family::kP3PosPosPos, {3, 2, 3}));
  ASSERT_NE(ii, nullptr);
  EXPECT_EQ(ii->second, desc(Family::kCliquePlusBipartite, {6, 2, 2}));
  EXPECT_EQ(ii->first.order(), 8u);
  EXPECT_EQ(ii->second.order(), 10u);

  for (const auto& p : pairs) {
    EXPECT_EQ(bcd_formula(p.first), bcd_formula(p.second)) << p.first.to_text();
    EXPECT_LT(p.first.order(), p.second.order());
    EXPECT_FALSE(p.scheme == "4(iii)" && p.first == desc(Family::kP3PosPosPos, {2, 3, 2}));
  }
}

TEST(Pairs, PineappleConstruction) {
  const auto pp = prop5_pair(2);
  EXPECT_EQ(pp.pineapple.order(), 8u);
  EXPECT_EQ(pp.padded_mate.order(), 8u);
  const IntPolynomial expected =
      IntPolynomial{8, -7, -2, 1} * IntPolynomial::linear_power(-1, 2) * IntPolynomial::monomial(3);
  EXPECT_EQ(char_poly_adjacency(pp.pineapple), expected);
  EXPECT_EQ(char_poly_adjacency(pp.padded_mate), expected);
  EXPECT_NE(canonical_form(pp.pineapple), canonical_form(pp.padded_mate));

  const auto p3 = prop5_pair(3);
  EXPECT_EQ(p3.pineapple.order(), 15u);
  EXPECT_EQ(p3.padding, 6u);
  EXPECT_EQ(char_poly_adjacency(p3.pineapple), char_poly_adjacency(p3.padded_mate));
  EXPECT_EQ(prop5_pairs(25).size(), 3u);
}

TEST(Pairs, ConnectedConstruction) {
  const auto pair = prop6_pair(1, 2);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->first, classify_tuple(SignedTuple{1, -2, 4}));
  EXPECT_EQ(pair->second, classify_tuple(SignedTuple{-2, 3, 2}));
  EXPECT_EQ(bcd_formula(pair->first), (Bcd{3, 10, 6}));
  EXPECT_EQ(bcd_formula(pair->second), (Bcd{3, 10, 6}));
  const Graph a = realize(pair->first), b = realize(pair->second);
  EXPECT_EQ(a.order(), 7u);
  EXPECT_EQ(oracle::to_int_poly(oracle::charpoly_by_expansion(a)), oracle::to_int_poly(oracle::charpoly_by_expansion(b)));

  for (int q = 2; q <= 12; ++q) {
    const auto adjacent = prop6_pair(q - 1, q);
    ASSERT_TRUE(adjacent.has_value()) << q;
    EXPECT_EQ(adjacent->first.tuple()->part_size(2), static_cast<std::size_t>(q * q));
  }
  EXPECT_FALSE(prop6_pair(2, 2).has_value());
  EXPECT_FALSE(prop6_pair(3, 2).has_value());
}

TEST(Improper, BipartiteDivisorCondition) {
  const auto k28 = improper_analysis(desc(Family::kBipartite, {2, 8}));
  EXPECT_FALSE(k28.ds);
  ASSERT_EQ(k28.witnesses.size(), 1u);
  EXPECT_EQ(k28.witnesses[0].to_string(), "K(4|4)+2K1");
  EXPECT_EQ(char_poly_adjacency(k28.witnesses[0].graph()), char_poly_adjacency(complete_bipartite(2, 8)));

  EXPECT_TRUE(improper_analysis(desc(Family::kBipartite, {3, 3})).ds);
  EXPECT_TRUE(improper_analysis(desc(Family::kBipartite, {2, 3})).ds);
  EXPECT_FALSE(improper_analysis(desc(Family::kBipartite, {1, 4})).ds);
}

TEST(Improper, SplitGraphsAreDetermined) {
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; q <= 6; ++q) {
      const auto v = improper_analysis(desc(Family::kSplit, {p, q}));
      EXPECT_TRUE(v.ds);
      EXPECT_TRUE(v.witnesses.empty());
    }
}

TEST(Improper, WitnessesAreCospectral) {
  for (int p = 1; p <= 8; ++p)
    for (int q = p; q <= 12; ++q) {
      const auto d = desc(Family::kBipartite, {p, q});
      const auto poly = char_poly_adjacency(realize(d));
      for (const auto& w : improper_analysis(d).witnesses) {
        EXPECT_EQ(char_poly_adjacency(w.graph()), poly) << w.to_string();
        EXPECT_EQ(w.graph().order(), realize(d).order());
      }
    }
}
