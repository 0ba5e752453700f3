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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "omsr/catalog.hpp"
#include "omsr/constructions.hpp"
#include "omsr/search.hpp"
#include "omsr/serialization.hpp"
#include "omsr/verdict.hpp"
#include "oracles.hpp"

namespace omsr {
namespace {

SearchSpace space(const std::string& g, int m, bool reductions = true,
                  std::optional<int> max_valency = std::nullopt) {
  SearchSpace s;
  s.group = resolve_group(g);
  s.m = m;
  s.max_valency = max_valency;
  if (!reductions) s.reductions = {false, false};
  return s;
}

TEST(Search, ClosedFormCountForElementaryAbelianHaarSpaces) {
  for (int k = 1; k <= 3; ++k) {
    SearchSpace s = space("Z2^" + std::to_string(k), 2, false);
    Certificate c = prove_nonexistence(s);
    EXPECT_EQ(c.kind, CertificateKind::kNonexistence);
    const int n = 1 << k;
    std::uint64_t expected = 0;
    for (int d = 0; d <= (2 * n - 1) / 2; ++d)
      expected += oracle::binomial(n, d) * oracle::binomial(n - d, d);
    EXPECT_EQ(c.candidates_examined, expected);
    EXPECT_EQ(z2_haar_space_size(k, s.valency_lo(), s.valency_hi()), expected);
    EXPECT_TRUE(c.reductions_used.empty());
  }
}

// Labelled oriented regular digraphs on m vertices, by brute force over
// adjacency matrices.
std::uint64_t oriented_regular_count(int m, int max_d) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) pairs.push_back({u, v});
  std::uint64_t count = 0;
  std::vector<int> state(pairs.size(), 0);
  for (;;) {
    std::vector<int> out(m, 0), in(m, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [u, v] = pairs[k];
      if (state[k] == 1) ++out[u], ++in[v];
      if (state[k] == 2) ++out[v], ++in[u];
    }
    bool ok = out[0] <= max_d;
    for (int v = 0; v < m && ok; ++v) ok = out[v] == out[0] && in[v] == out[0];
    count += ok;
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
  return count;
}

TEST(Search, TrivialGroupSpaceMatchesBruteForce) {
  for (int m = 2; m <= 6; ++m) {
    SCOPED_TRACE(m);
    SearchSpace s = space("Z1", m, false);
    Certificate c = prove_nonexistence(s);
    EXPECT_EQ(c.kind, CertificateKind::kNonexistence);
    EXPECT_EQ(c.candidates_examined, oriented_regular_count(m, s.valency_hi()));
  }
}

TEST(Search, ReductionsPreserveExistence) {
  struct Case {
    std::string g;
    int m;
    int max_d;
  };
  for (auto& cs : std::vector<Case>{{"Z3", 1, 1}, {"Z3", 2, 2}, {"Z4", 2, 2}, {"Z2", 3, 2},
                                    {"Z2^2", 2, 3}, {"GD(Z3)", 1, 2}, {"Z5", 1, 2},
                                    {"Z6", 1, 3}, {"Z2", 4, 3}, {"Z3", 3, 2}, {"Z4xZ2", 2, 3}}) {
    for (int d = 0; d <= cs.max_d; ++d) {
      SCOPED_TRACE(testing::Message() << cs.g << " m=" << cs.m << " d=" << d);
      SearchSpace a = space(cs.g, cs.m, true, d), b = space(cs.g, cs.m, false, d);
      a.min_valency = b.min_valency = d;
      Certificate ca = prove_nonexistence(a), cb = prove_nonexistence(b);
      EXPECT_EQ(ca.kind, cb.kind);
      EXPECT_LE(ca.candidates_examined, cb.candidates_examined);
      for (auto* c : {&ca, &cb})
        if (c->connection_sets) EXPECT_TRUE(check_omsr(*c->connection_sets).is_omsr);
    }
  }
}

TEST(Search, NegativeResults) {
  EXPECT_EQ(prove_nonexistence(space("Z2", 3)).kind, CertificateKind::kNonexistence);
  EXPECT_EQ(prove_nonexistence(space("Z2^2", 2, false)).kind, CertificateKind::kNonexistence);
  EXPECT_EQ(find_orr(resolve_group("Q8")).kind, CertificateKind::kOrrNonexistence);
  EXPECT_EQ(find_orr(resolve_group("GD(Z4)")).kind, CertificateKind::kOrrNonexistence);
  EXPECT_EQ(find_orr(resolve_group("Z2^3")).kind, CertificateKind::kOrrNonexistence);
}

TEST(Search, FindsWitnesses) {
  Certificate orr = find_orr(resolve_group("Z5"));
  ASSERT_EQ(orr.kind, CertificateKind::kOrrWitness);
  EXPECT_EQ(orr.connection_sets->at(0, 0).size(), 1);
  EXPECT_EQ(find_orr(resolve_group("Z2")).kind, CertificateKind::kOrrWitness);
  Certificate w = find_omsr(resolve_group("Z4xZ2"), 2, 3);
  ASSERT_EQ(w.kind, CertificateKind::kOmsrWitness);
  OmsrVerdict v = check_omsr(*w.connection_sets);
  EXPECT_TRUE(v.is_omsr);
  EXPECT_EQ(w.aut_order, 8);
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  for (auto [g, m] : std::vector<std::pair<std::string, int>>{{"Z4xZ2", 2}, {"Z2^3", 2},
                                                                {"GD(Z3)", 2}}) {
    SCOPED_TRACE(g);
    SearchSpace s = space(g, m, true, 4);
    std::string first;
    for (int w : {1, 2, 4}) {
      Certificate c = prove_nonexistence(s, {0, 0, w});
      std::string text = to_json(c).dump();
      if (first.empty()) first = text;
      EXPECT_EQ(text, first) << "workers=" << w;
    }
  }
}

TEST(Search, BudgetIsEnforced) {
  EXPECT_THROW(prove_nonexistence(space("Z2^3", 2, false), {10, 0, 1}), BudgetExceeded);
  EXPECT_THROW(prove_nonexistence(space("Z2^3", 2, false), {10, 0, 3}), BudgetExceeded);
}

TEST(Search, SizeMatricesHaveConstantLineSums) {
  GroupPtr g = resolve_group("Z5");
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 3; ++d) {
      auto all = size_matrices(*g, m, d, false);
      for (auto& s : all)
        for (int i = 0; i < m; ++i) {
          int row = 0, col = 0;
          for (int j = 0; j < m; ++j) row += s[i * m + j], col += s[j * m + i];
          EXPECT_EQ(row, d);
          EXPECT_EQ(col, d);
          EXPECT_LE(s[i * m + i], 2);
        }
      auto reduced = size_matrices(*g, m, d, true);
      EXPECT_LE(reduced.size(), all.size());
      for (auto& s : reduced) EXPECT_TRUE(is_lex_min_under_relabelling(s, m));
    }
}

// Orbits of k-subsets under maps x -> a phi(x) c (off-diagonal) or phi
// (diagonal, admissible sets only), counted with brute-force automorphisms.
std::size_t orbit_count(const FiniteGroup& g, int k, bool diagonal) {
  oracle::Table t{g.order(), g.table()};
  auto autos = oracle::group_automorphisms(t);
  std::vector<std::vector<int>> maps;
  for (auto& phi : autos) {
    if (diagonal) {
      maps.push_back(phi);
      continue;
    }
    for (int a = 0; a < t.n; ++a)
      for (int c = 0; c < t.n; ++c) {
        std::vector<int> f(t.n);
        for (int x = 0; x < t.n; ++x) f[x] = t.at(t.at(a, phi[x]), c);
        maps.push_back(f);
      }
  }
  std::set<std::uint64_t> canon;
  for (std::uint64_t s = 0; s < (1ULL << t.n); ++s) {
    if (__builtin_popcountll(s) != k) continue;
    if (diagonal) {
      if (s & 1) continue;
      bool bad = false;
      for (int x = 0; x < t.n; ++x)
        if ((s >> x & 1) && (s >> t.inv(x) & 1)) bad = true;
      if (bad) continue;
    }
    std::uint64_t best = ~0ULL;
    for (auto& f : maps) {
      std::uint64_t img = 0;
      for (int x = 0; x < t.n; ++x)
        if (s >> x & 1) img |= 1ULL << f[x];
      best = std::min(best, img);
    }
    canon.insert(best);
  }
  return canon.size();
}

TEST(Search, FirstCellRepresentativesAreOrbitRepresentatives) {
  for (std::string name : {"Z2^3", "Z4xZ2", "GD(Z3)", "Z7", "Q8"}) {
    GroupPtr g = resolve_group(name);
    for (int k = 1; k <= 3; ++k)
      for (bool diag : {false, true}) {
        SCOPED_TRACE(testing::Message() << name << " k=" << k << " diag=" << diag);
        EXPECT_EQ(first_cell_representatives(*g, k, diag, true).size(),
                  orbit_count(*g, k, diag));
      }
  }
}

TEST(Search, SymmetriesPreserveTheVerdict) {
  for (std::string id : {"exceptional:G=Q8,m=3", "z2_small:n=2,m=3", "gendihedral_orr:H=Z4,m=3"}) {
    SCOPED_TRACE(id);
    ConnectionSets t = construct(id).sets;
    bool base = check_omsr(t).is_omsr;
    const int n = t.group().order();
    std::vector<Element> c(t.m());
    for (int i = 0; i < t.m(); ++i) c[i] = (3 * i + 1) % n;
    EXPECT_EQ(check_omsr(translate_parts(t, c)).is_omsr, base);
    std::vector<int> perm(t.m());
    std::iota(perm.rbegin(), perm.rend(), 0);
    ConnectionSets r = relabel_parts(t, perm);
    EXPECT_EQ(r.at(perm[0], perm[1]), t.at(0, 1));
    EXPECT_EQ(check_omsr(r).is_omsr, base);
  }
}

TEST(Serialization, ConnectionSetsRoundTrip) {
  for (std::string id : {"exceptional:G=H2,m=3", "gendihedral_noorr:H=Z3^2,m=2", "trivial:m=13"}) {
    ConnectionSets t = construct(id).sets;
    nlohmann::json j = to_json(t);
    ConnectionSets back = connection_sets_from_json(j);
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.notes, t.notes);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Serialization, DigraphAndCertificateRoundTrip) {
  Digraph d = build(construct("trivial:m=8").sets).digraph();
  EXPECT_EQ(digraph_from_json(to_json(d)), d);
  Certificate c = find_omsr(resolve_group("Z4xZ2"), 2, 3);
  Certificate back = certificate_from_json(to_json(c));
  EXPECT_EQ(to_json(back).dump(), to_json(c).dump());
  EXPECT_FALSE(to_json(c).contains("wall_time"));
  EXPECT_TRUE(to_json(c, true).contains("wall_time"));
}

TEST(Serialization, ContentAddressedPaths) {
  EXPECT_EQ(fnv1a(""), 14695981039346656037ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  Certificate a = prove_nonexistence(space("Z2^2", 2));
  Certificate b = prove_nonexistence(space("Z2^2", 2));
  EXPECT_EQ(certificate_path("certs", a), certificate_path("certs", b));
  Certificate c = prove_nonexistence(space("Z2^2", 2, false));
  EXPECT_NE(certificate_path("certs", a), certificate_path("certs", c));
  auto dir = std::filesystem::temp_directory_path() / "omsr_test_certs";
  std::filesystem::remove_all(dir);
  std::string path = certificate_path(dir.string(), a);
  write_file_atomic(path, to_json(a).dump(2));
  std::ifstream is(path);
  EXPECT_EQ(certificate_from_json(nlohmann::json::parse(is)).kind, a.kind);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace omsr
