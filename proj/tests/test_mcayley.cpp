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
#include "omsr/mcayley.hpp"
#include "oracles.hpp"

namespace omsr {
namespace {

ConnectionSets random_sets(const GroupPtr& g, int m, double density, std::mt19937_64& rng,
                           bool allow_identity_on_diagonal = false) {
  std::bernoulli_distribution coin(density);
  ConnectionSets t(g, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ElementSet s(g->order());
      for (Element x = 0; x < g->order(); ++x)
        if ((i != j || x != 0 || allow_identity_on_diagonal) && coin(rng)) s.insert(x);
      t.set(i, j, s);
    }
  return t;
}

std::vector<std::vector<std::vector<int>>> cells_of(const ConnectionSets& t) {
  std::vector<std::vector<std::vector<int>>> c(t.m(), std::vector<std::vector<int>>(t.m()));
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.m(); ++j) c[i][j] = t.at(i, j).elements();
  return c;
}

TEST(MCayley, ArcsMatchTheDefinition) {
  std::mt19937_64 rng(1);
  for (std::string name : {"Z5", "GD(Z4)", "Q8", "Z2^3"}) {
    GroupPtr g = resolve_group(name);
    for (int m = 1; m <= 3; ++m) {
      ConnectionSets t = random_sets(g, m, 0.3, rng);
      auto expected = oracle::mcayley_arcs({g->order(), g->table()}, cells_of(t));
      EXPECT_EQ(build(t).digraph().arcs(), expected) << name << " m=" << m;
    }
  }
}

TEST(MCayley, RightTranslationsAreAutomorphisms) {
  std::mt19937_64 rng(2);
  for (std::string name : {"GD(Z5)", "Q8", "H1"}) {
    GroupPtr g = resolve_group(name);
    MCayleyDigraph d = build(random_sets(g, 3, 0.2, rng));
    for (Element x = 0; x < g->order(); ++x) {
      Permutation p = right_action(d, x);
      EXPECT_TRUE(is_automorphism(d.digraph(), p));
      for (int i = 0; i < 3; ++i)
        EXPECT_EQ(d.part_of(p[d.vertex(0, i)]), i);
    }
  }
}

TEST(MCayley, ValidationAgreesWithTheBuiltDigraph) {
  std::mt19937_64 rng(3);
  int oriented = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GroupPtr g = resolve_group(trial % 2 ? "GD(Z3)" : "Z7");
    ConnectionSets t = random_sets(g, 2 + trial % 2, 0.12, rng);
    ValidationReport v = validate(t);
    ASSERT_TRUE(v.loop_free);
    EXPECT_EQ(v.oriented, is_oriented(build(t).digraph()));
    oriented += v.oriented;
  }
  EXPECT_GT(oriented, 0);
  EXPECT_LT(oriented, 200);
}

TEST(MCayley, IdentityOnTheDiagonalIsALoop) {
  GroupPtr g = resolve_group("Z3");
  ConnectionSets t(g, 2);
  t.set(1, 1, g->parse_set({"1"}));
  EXPECT_FALSE(validate(t).loop_free);
  EXPECT_THROW(build(t), std::invalid_argument);
}

TEST(MCayley, BiCayleyLayout) {
  GroupPtr g = resolve_group("Z4xZ2");
  ElementSet r = g->parse_set({"x"}), l = g->parse_set({"xy"}), s = g->parse_set({"1"}),
             t = g->parse_set({"y"});
  ConnectionSets c = bicay(g, r, l, s, t);
  EXPECT_EQ(c.at(0, 0), r);
  EXPECT_EQ(c.at(1, 1), l);
  EXPECT_EQ(c.at(0, 1), s);
  EXPECT_EQ(c.at(1, 0), t);
  MCayleyDigraph d = build(c);
  EXPECT_EQ(d.labels()[d.vertex(g->parse("x"), 1)], "x_1");
  EXPECT_EQ(part_set(d, 1).size(), 8u);
}

TEST(MCayley, SetModWrapsIndices) {
  GroupPtr g = resolve_group("Z3");
  ConnectionSets t(g, 4);
  t.set_mod(3, 4, g->parse_set({"x"}));
  t.set_mod(0, -1, g->parse_set({"x^2"}));
  EXPECT_EQ(t.at(3, 0), g->parse_set({"x"}));
  EXPECT_EQ(t.at(0, 3), g->parse_set({"x^2"}));
}

}  // namespace
}  // namespace omsr
