// Copyright 2026 The omsr Authors
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

#include <gtest/gtest.h>

#include "omsr/catalog.hpp"
#include "omsr/constructions.hpp"
#include "omsr/verdict.hpp"
#include "oracles.hpp"

namespace omsr {
namespace {

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  auto s = [](int v) { return std::to_string(v); };
  for (int m = 7; m <= 16; ++m) ids.push_back("trivial:m=" + s(m));
  for (int n = 1; n <= 4; ++n)
    for (int m = 3; m <= 14; ++m) ids.push_back("z2_small:n=" + s(n) + ",m=" + s(m));
  for (int n = 5; n <= 7; ++n)
    for (int m = 2; m <= 5; ++m) ids.push_back("z2_large:n=" + s(n) + ",m=" + s(m));
  for (std::string h : {"Z3", "Z4", "Z5"})
    for (int m = 2; m <= 6; ++m) ids.push_back("gendihedral_orr:H=" + h + ",m=" + s(m));
  for (auto& h : gendihedral_noorr_bases())
    for (int m = 2; m <= 5; ++m) ids.push_back("gendihedral_noorr:H=" + h + ",m=" + s(m));
  for (auto& g : exceptional_group_names())
    for (int m = 2; m <= 5; ++m) ids.push_back("exceptional:G=" + g + ",m=" + s(m));
  for (std::string g : {"Z3", "Z5", "Z7"})
    for (int m = 2; m <= 5; ++m) ids.push_back("orr_lift:G=" + g + ",R=x,m=" + s(m));
  return ids;
}

TEST(Constructions, SelfCheckEverywhereExceptTheKnownDigonTable) {
  for (auto& id : all_ids()) {
    SCOPED_TRACE(id);
    Construction c = construct(id);
    SelfCheck s = self_check(c);
    EXPECT_TRUE(s.loop_free);
    if (id == "z2_small:n=1,m=3") {
      EXPECT_FALSE(s.oriented);
      continue;
    }
    EXPECT_TRUE(s.ok()) << s.oriented << s.regular << s.valency_ok;
  }
}

TEST(Constructions, StatedValencies) {
  EXPECT_EQ(construct("trivial:m=12").valency, 2);
  EXPECT_EQ(construct("z2_small:n=4,m=5").valency, 3);
  EXPECT_EQ(construct("z2_small:n=4,m=12").valency, 2);
  EXPECT_EQ(construct("z2_large:n=6,m=2").valency, 7);
  EXPECT_EQ(construct("z2_large:n=6,m=3").valency, 14);
  EXPECT_EQ(construct("exceptional:G=Q8,m=2").valency, 3);
  EXPECT_EQ(construct("exceptional:G=Z4xZ2^4,m=3").valency, 7);
  EXPECT_EQ(construct("gendihedral_noorr:H=Z4xZ2^4,m=2").valency, 6);
  EXPECT_EQ(construct("orr_lift:G=Z5,R=x,m=2").valency, 2);
  EXPECT_EQ(construct("orr_lift:G=Z5,R=x,m=4").valency, 3);
  EXPECT_EQ(exceptional_sets("Z4xZ2^4").r.size(), 5u);
}

TEST(Constructions, SmallOmsrVerdicts) {
  for (std::string id : {"exceptional:G=Q8,m=2", "exceptional:G=H1,m=4", "trivial:m=7",
                         "z2_small:n=2,m=3", "gendihedral_orr:H=Z3,m=2", "orr_lift:G=Z5,R=x,m=3"}) {
    SCOPED_TRACE(id);
    OmsrVerdict v = check_omsr(construct(id).sets);
    EXPECT_TRUE(v.is_omsr);
    EXPECT_EQ(v.stabilizer_order, 1);
  }
}

TEST(Constructions, LiteralTablesThatNeedRepairs) {
  // Trivial group, 7 <= m <= 11: the literal T21 and T12 form a digon.
  for (int m = 7; m <= 11; ++m) {
    ConnectionSets literal = from_table(resolve_group("Z1"), m, trivial_literal_table(m));
    EXPECT_FALSE(validate(literal).oriented) << m;
    EXPECT_FALSE(trivial_repairs(m).empty());
  }
  for (int m = 5; m <= 11; ++m) {
    ConnectionSets literal = from_table(resolve_group("Z2"), m, z2_small_literal_table(1, m));
    EXPECT_FALSE(validate(literal).oriented) << m;
  }
  ConnectionSets z23 = from_table(resolve_group("Z2^3"), 4, z2_small_literal_table(3, 4));
  EXPECT_FALSE(is_regular(build(z23).digraph()).has_value());
  EXPECT_TRUE(z2_small_repairs(2, 5).empty());
  EXPECT_TRUE(z2_small_repairs(4, 9).empty());
}

TEST(Constructions, LiteralSetsWithInvolutionsAreNotOriented) {
  for (std::string h : {"Z4xZ2", "Z3^2"}) {
    SCOPED_TRACE(h);
    EXPECT_FALSE(validate(gendihedral_noorr_omsr(h, 3, true)).oriented);
    EXPECT_TRUE(validate(gendihedral_noorr_omsr(h, 3, false)).oriented);
    EXPECT_FALSE(gendihedral_noorr_omsr(h, 3).notes.empty());
  }
  for (std::string g : {"H1", "H2", "H3", "D4oD4"}) {
    SCOPED_TRACE(g);
    EXPECT_TRUE(exceptional_sets_substituted(g));
    EXPECT_FALSE(validate(exceptional_omsr(g, 3, true)).oriented);
    ConnectionSets t = exceptional_omsr(g, 3);
    EXPECT_TRUE(validate(t).oriented);
    EXPECT_FALSE(t.notes.empty());
    RLSets s = exceptional_sets(g);
    EXPECT_EQ(s.r.size(), s.l.size());
  }
  EXPECT_FALSE(exceptional_sets_substituted("Q8"));
}

TEST(Constructions, GeneralizedDihedralBiCayleyReadings) {
  GroupPtr h = resolve_group("Z5");
  ElementSet r = h->parse_set({"x", "x^2"});
  for (bool literal : {false, true}) {
    SCOPED_TRACE(literal);
    ConnectionSets t = gendihedral_orr_o2sr("Z5", r, h->parse("x"), literal);
    ElementSet rg = t.at(0, 0);
    EXPECT_EQ(t.at(1, 1), literal ? set_inverse(t.group(), rg) : rg);
    EXPECT_TRUE(check_omsr(t).is_omsr);
  }
  EXPECT_EQ(construct("gendihedral_orr:H=Z4,m=2,literal=1").sets.at(1, 1).elements(),
            std::vector<int>{3});
}

TEST(Constructions, TemplateSetsAreInverseFree) {
  for (auto& g : exceptional_group_names()) {
    SCOPED_TRACE(g);
    GroupPtr grp = resolve_group(g);
    RLSets s = exceptional_sets(g);
    for (auto* v : {&s.r, &s.l}) {
      ElementSet set = grp->parse_set(*v);
      EXPECT_EQ(set.size(), static_cast<int>(v->size()));
      EXPECT_FALSE(set.intersects(set_inverse(*grp, set)));
      EXPECT_TRUE(set.contains(grp->generator("x")));
    }
  }
}

TEST(Constructions, Z2LargeSetIdentities) {
  for (int n = 5; n <= 8; ++n) {
    SCOPED_TRACE(n);
    Z2LargeSets z = z2_large_sets(n);
    const FiniteGroup& g = *z.group;
    oracle::Table t{g.order(), g.table()};
    auto std_set = [](const ElementSet& e) {
      auto v = e.elements();
      return std::set<int>(v.begin(), v.end());
    };
    auto s = std_set(z.s), r = std_set(z.r), tt = std_set(z.t);
    Element x = 0;
    for (int i = 1; i <= n; ++i) x = g.mul(x, g.generator("x" + std::to_string(i)));
    std::set<int> xs;
    for (int e : s) xs.insert(t.at(x, e));
    EXPECT_EQ(r, xs);
    auto s2 = oracle::product(t, s, s), r2 = oracle::product(t, r, r);
    auto sr = oracle::product(t, s, r), st = oracle::product(t, s, tt),
         rt = oracle::product(t, r, tt);
    std::size_t big = 1 + n + n * (n - 1) / 2;
    EXPECT_EQ(s2.size(), big);
    EXPECT_EQ(r2.size(), big);
    EXPECT_EQ(sr.size(), big);
    // Direct enumeration gives n^2 - 4; the literal count n^2 - n - 3 is lower.
    EXPECT_EQ(st.size(), static_cast<std::size_t>(n * n - 4));
    EXPECT_EQ(rt.size(), st.size());
    EXPECT_GT(st.size(), r2.size());
    EXPECT_FALSE(std::includes(sr.begin(), sr.end(), st.begin(), st.end()));
    EXPECT_FALSE(std::includes(st.begin(), st.end(), sr.begin(), sr.end()));
  }
}

TEST(Constructions, Z2LargeTGeneratesOnlyTheEvenWeightSubgroup) {
  for (int n = 5; n <= 6; ++n) {
    SCOPED_TRACE(n);
    Z2LargeSets z = z2_large_sets(n);
    EXPECT_EQ(generated_subgroup(*z.group, z.t.elements()).size(), 1 << (n - 1));
    ConnectionSets c(z.group, 1);
    c.set(0, 0, z.t);
    EXPECT_FALSE(is_connected_underlying(build(c).digraph()));
    EXPECT_TRUE(check_omsr(z2_large_o2sr(n)).is_omsr);
  }
}

TEST(Constructions, TrivialWalksForLargeM) {
  for (int m = 12; m <= 20; ++m) {
    SCOPED_TRACE(m);
    auto walks = trivial_cycles(m);
    ASSERT_EQ(walks.size(), 3u);
    Digraph d = build(trivial_omsr(m)).digraph();
    EXPECT_TRUE(arcs_partition_into(d, walks));
    EXPECT_TRUE(is_connected_underlying(d));
    EXPECT_EQ(is_regular(d), 2);
    VertexSet off = set_difference(all_vertices(d), cycle_support(oriented_3cycles(d)));
    EXPECT_EQ(off, (m % 2 == 0 ? VertexSet{5, 6, 7, 8} : VertexSet{5, 6, 7}));
  }
}

TEST(ConstructionId, ParseAndPrint) {
  ConstructionId id = ConstructionId::parse("orr_lift:G=Z5,R=x;x^2,m=6");
  EXPECT_EQ(id.family, "orr_lift");
  EXPECT_EQ(id.get("R"), "x;x^2");
  EXPECT_EQ(id.get_int("m"), 6);
  EXPECT_EQ(ConstructionId::parse(id.to_string()).params, id.params);
  EXPECT_THROW(id.get("H"), UnknownConstruction);
  EXPECT_THROW(construct("nope:m=3"), UnknownConstruction);
  EXPECT_THROW(construct("trivial:m=x"), UnknownConstruction);
  EXPECT_EQ(construction_families().size(), 8u);
}

TEST(Tables, EditsReplaceAddAndDrop) {
  Table t{{0, 1, {"x"}}, {1, 2, {"y"}}};
  Table e = apply_edits(t, {{TableEntry{0, 1, {"x"}}, TableEntry{0, 2, {"x"}}},
                            {std::nullopt, TableEntry{2, 0, {"1"}}},
                            {TableEntry{1, 2, {"y"}}, std::nullopt}});
  EXPECT_EQ(e, (Table{{0, 2, {"x"}}, {2, 0, {"1"}}}));
  EXPECT_FALSE(describe(TableEdit{std::nullopt, TableEntry{2, 0, {"1"}}}).empty());
}

}  // namespace
}  // namespace omsr
