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
#include "omsr/claims.hpp"
#include "omsr/dispatch.hpp"
#include "oracles.hpp"

namespace omsr {
namespace {

TEST(Claims, TripleCountMatchesEnumeration) {
  std::mt19937_64 rng(4);
  for (std::string name : {"Z7", "GD(Z5)", "Q8"}) {
    GroupPtr g = resolve_group(name);
    oracle::Table t{g->order(), g->table()};
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet r(g->order());
      std::bernoulli_distribution coin(0.4);
      for (Element x = 1; x < g->order(); ++x)
        if (coin(rng)) r.insert(x);
      long expected = 0;
      for (int a : r.elements())
        for (int b : r.elements())
          expected += r.contains(t.at(a, b));
      EXPECT_EQ(triple_count(*g, r), expected);
    }
  }
}

TEST(Claims, OrrLiftArcCounts) {
  for (std::string name : {"Z3", "Z5", "Z7"}) {
    GroupPtr g = resolve_group(name);
    ElementSet r = g->parse_set({"x"});
    for (int m = 3; m <= 8; ++m) {
      ClaimReport c = claim_orr_lift(g, r, g->parse("x"), m);
      EXPECT_TRUE(c.matches()) << c.summary();
      EXPECT_EQ(static_cast<int>(c.measured.size()), m);
    }
  }
}

TEST(Claims, GeneralizedDihedralArcCounts) {
  for (std::string h : {"Z3", "Z4", "Z5"}) {
    GroupPtr g = resolve_group(h);
    ElementSet r = g->parse_set({"x"});
    for (int m = 2; m <= 8; ++m) {
      ClaimReport c = claim_gendihedral(h, r, g->parse("x"), m);
      EXPECT_TRUE(c.matches()) << c.summary();
    }
  }
}

TEST(Claims, BiCayleyBranchFollowsTheSquareOfA) {
  // Z5 with R = {x, x^2}: a = x has a^2 in R; a = x^2 has a^2 = x^4 not in R.
  GroupPtr g = resolve_group("Z5");
  ElementSet r = g->parse_set({"x", "x^2"});
  ClaimReport in = claim_gendihedral("Z5", r, g->parse("x"), 2);
  ClaimReport out = claim_gendihedral("Z5", r, g->parse("x^2"), 2);
  EXPECT_NE(in.branch, out.branch);
  EXPECT_EQ(in.expected, (std::vector<long>{in.k + 4, in.k + 2}));
  EXPECT_EQ(out.expected, (std::vector<long>{out.k + 3, out.k + 1}));
  EXPECT_TRUE(in.matches()) << in.summary();
  EXPECT_TRUE(out.matches()) << out.summary();
}

TEST(Dispatch, Examples) {
  EXPECT_EQ(theorem_dispatch("Z2^4", 2).verdict, DispatchVerdict::kNoOmsrByTheorem);
  EXPECT_EQ(theorem_dispatch("Z2^4", 2).branch, 3);
  EXPECT_EQ(theorem_dispatch("Z1", 5).verdict, DispatchVerdict::kNoOmsrByTheorem);
  EXPECT_EQ(theorem_dispatch("Z1", 5).branch, 4);
  DispatchResult q = theorem_dispatch("Q8", 3);
  ASSERT_EQ(q.verdict, DispatchVerdict::kConstruction);
  EXPECT_EQ(q.construction->family, "exceptional");
  EXPECT_EQ(theorem_dispatch("Q8", 1).branch, 2);
  EXPECT_EQ(theorem_dispatch("GD(Z5)", 1).branch, 2);
  EXPECT_EQ(theorem_dispatch("Z2^2", 1).branch, 2);
  EXPECT_EQ(theorem_dispatch("Z5", 1).construction->family, "orr");
  EXPECT_EQ(theorem_dispatch("Z2", 1).verdict, DispatchVerdict::kConstruction);
  EXPECT_EQ(theorem_dispatch("Z1", 7).construction->family, "trivial");
  EXPECT_EQ(theorem_dispatch("Z2^6", 2).construction->family, "z2_large");
  EXPECT_EQ(theorem_dispatch("GD(Z3^2)", 4).construction->family, "gendihedral_noorr");
  EXPECT_EQ(theorem_dispatch("GD(Z7)", 4).construction->family, "gendihedral_orr");
  EXPECT_EQ(theorem_dispatch("Z6", 3).construction->family, "orr_lift");
  EXPECT_EQ(theorem_dispatch("nonsense", 3).verdict, DispatchVerdict::kOutOfCatalog);
}

TEST(Dispatch, ConstructionsAreBuildable) {
  for (auto& name : catalog_names()) {
    if (resolve_group(name)->order() > 16) continue;
    for (int m = 1; m <= 4; ++m) {
      DispatchResult r = theorem_dispatch(name, m);
      if (r.verdict != DispatchVerdict::kConstruction) continue;
      SCOPED_TRACE(r.construction->to_string());
      EXPECT_NO_THROW(construct(*r.construction));
    }
  }
}

}  // namespace
}  // namespace omsr
