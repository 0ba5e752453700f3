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

#include <map>

#include <gtest/gtest.h>

#include "omsr/catalog.hpp"
#include "omsr/coset_enumeration.hpp"
#include "omsr/group.hpp"
#include "omsr/word.hpp"
#include "oracles.hpp"

namespace omsr {
namespace {

oracle::Table table_of(const FiniteGroup& g) { return {g.order(), g.table()}; }

std::map<int, int> order_statistics(const FiniteGroup& g) {
  oracle::Table t = table_of(g);
  std::map<int, int> out;
  for (int a = 0; a < t.n; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = t.at(x, a);
      ++k;
    }
    ++out[k];
  }
  return out;
}

TEST(Catalog, EveryGroupSatisfiesTheAxioms) {
  for (auto& name : catalog_names()) {
    SCOPED_TRACE(name);
    oracle::Table t = table_of(*resolve_group(name));
    for (int a = 0; a < t.n; ++a) {
      EXPECT_EQ(t.at(0, a), a);
      EXPECT_EQ(t.at(a, 0), a);
      EXPECT_GE(t.inv(a), 0);
      for (int b = 0; b < t.n; ++b)
        for (int c = 0; c < t.n; ++c) ASSERT_EQ(t.at(t.at(a, b), c), t.at(a, t.at(b, c)));
    }
    EXPECT_FALSE(verify_group_axioms(*resolve_group(name)).has_value());
  }
}

TEST(Catalog, OrdersOfTheExceptionalGroups) {
  EXPECT_EQ(resolve_group("Q8")->order(), 8);
  EXPECT_EQ(resolve_group("Z4xZ2")->order(), 8);
  EXPECT_EQ(resolve_group("Z4xZ2^4")->order(), 64);
  EXPECT_EQ(resolve_group("Z3xZ2^3")->order(), 24);
  EXPECT_EQ(resolve_group("H1")->order(), 16);
  EXPECT_EQ(resolve_group("H2")->order(), 16);
  EXPECT_EQ(resolve_group("H3")->order(), 32);
  EXPECT_EQ(resolve_group("D4oD4")->order(), 32);
  EXPECT_EQ(exceptional_group_names().size(), 11u);
}

TEST(Catalog, OrderStatistics) {
  EXPECT_EQ(order_statistics(*resolve_group("Q8")), (std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_statistics(*resolve_group("Z4xZ2")),
            (std::map<int, int>{{1, 1}, {2, 3}, {4, 4}}));
  // Extraspecial 2^{1+4}_+: 19 involutions and 12 elements of order 4.
  EXPECT_EQ(order_statistics(*resolve_group("D4oD4")),
            (std::map<int, int>{{1, 1}, {2, 19}, {4, 12}}));
  EXPECT_EQ(order_statistics(*resolve_group("Z2^5")), (std::map<int, int>{{1, 1}, {2, 31}}));
  EXPECT_EQ(order_statistics(*resolve_group("GD(Z5)")),
            (std::map<int, int>{{1, 1}, {2, 5}, {5, 4}}));
}

TEST(Catalog, PresentationsOfH1H2H3HoldInTheTables) {
  for (std::string name : {"H1", "H2", "H3"}) {
    SCOPED_TRACE(name);
    GroupPtr g = resolve_group(name);
    Presentation p = parse_presentation(exceptional_presentation(name));
    for (auto& r : p.relators) EXPECT_EQ(g->eval(r), g->identity());
    EXPECT_FALSE(g->is_abelian());
  }
}

TEST(Catalog, GeneralizedDihedralInvertsTheBase) {
  for (std::string h : {"Z3", "Z4", "Z4xZ2", "Z3^2", "Z3xZ2^3"}) {
    SCOPED_TRACE(h);
    GroupPtr g = resolve_group("GD(" + h + ")");
    int hn = resolve_group(h)->order();
    ASSERT_EQ(g->order(), 2 * hn);
    Element b = g->generator("b");
    EXPECT_EQ(g->mul(b, b), g->identity());
    for (Element x = 0; x < hn; ++x) EXPECT_EQ(g->mul(g->mul(b, x), b), g->inv(x));
  }
}

TEST(Catalog, UnknownNamesThrow) {
  EXPECT_THROW(resolve_group("not-a-group"), UnknownGroup);
  EXPECT_THROW(lookup("GD(Q8)"), UnknownGroup);
}

TEST(Catalog, RegistersGroupsFromJson) {
  auto names = register_catalog(nlohmann::json::parse(R"({
    "name": "S3test", "kind": "presentation",
    "parameters": {"presentation": "<x, y | x^3 = y^2 = (xy)^2 = 1>", "order_bound": 6}
  })"));
  ASSERT_EQ(names, std::vector<std::string>{"S3test"});
  EXPECT_EQ(resolve_group("S3test")->order(), 6);
  EXPECT_FALSE(resolve_group("S3test")->is_abelian());
}

TEST(Words, DisplayNamesParseBack) {
  for (std::string name : {"Z2^4", "Q8", "H2", "D4oD4", "GD(Z4xZ2)", "Z3xZ2^3"}) {
    SCOPED_TRACE(name);
    GroupPtr g = resolve_group(name);
    for (Element e = 0; e < g->order(); ++e) EXPECT_EQ(g->parse(g->display_name(e)), e);
  }
}

TEST(Words, Syntax) {
  GroupPtr g = resolve_group("H1");
  Element x = g->generator("x"), y = g->generator("y");
  EXPECT_EQ(g->parse("(xy^{-1})^2"), g->identity());
  EXPECT_EQ(g->parse("x^y"), g->mul(g->mul(g->inv(y), x), y));
  EXPECT_EQ(g->parse("x⁻¹y"), g->mul(g->inv(x), y));
  EXPECT_EQ(g->parse("1"), g->identity());
  EXPECT_THROW(g->parse("q"), std::invalid_argument);
  EXPECT_EQ(free_reduce({1, -1, 2}), (Word{2}));
}

TEST(CosetEnumeration, SmallPresentations) {
  EXPECT_EQ(coset_enumerate(parse_presentation("<x | x^5>"), 5).order(), 5);
  EXPECT_EQ(coset_enumerate(parse_presentation("<x, y | x^3 = y^2 = (xy)^2 = 1>"), 6).order(), 6);
  FiniteGroup q = coset_enumerate(
      parse_presentation("<x, y | x^4 = y^4 = 1, x^2 = y^2, x^y = x^-1>"), 8);
  EXPECT_EQ(order_statistics(q), order_statistics(*resolve_group("Q8")));
  EXPECT_THROW(coset_enumerate(parse_presentation("<x | x^7>"), 3), CosetTableOverflow);
}

TEST(SetOps, ProductsAgreeWithDirectEnumeration) {
  GroupPtr g = resolve_group("GD(Z4)");
  oracle::Table t = table_of(*g);
  ElementSet a = g->parse_set({"x", "b", "xb"});
  ElementSet b = g->parse_set({"x^2", "b"});
  auto ea = a.elements(), eb = b.elements();
  std::set<int> oa(ea.begin(), ea.end()), ob(eb.begin(), eb.end());
  auto expected = oracle::product(t, oa, ob);
  auto got = set_product(*g, a, b).elements();
  EXPECT_EQ(std::set<int>(got.begin(), got.end()), expected);
  EXPECT_EQ(set_inverse(*g, set_inverse(*g, a)), a);
  EXPECT_EQ(generated_subgroup(*g, {g->generator("x")}).size(), 4);
}

}  // namespace
}  // namespace omsr
