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

#ifndef OMSR_TESTS_ORACLES_HPP_
#define OMSR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

// Reference implementations that share no code with the library. They work
// on plain adjacency matrices and multiplication tables.
namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(int n, const std::vector<std::pair<int, int>>& arcs) {
  Matrix a(n, std::vector<char>(n, 0));
  for (auto [u, v] : arcs) a[u][v] = 1;
  return a;
}

// Number of permutations p with a[u][v] == a[p[u]][p[v]] for all u, v.
inline std::uint64_t automorphism_count(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (a[u][v] != a[p[u]][p[v]]) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline Matrix random_digraph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Matrix a(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) a[u][v] = coin(rng);
  return a;
}

inline std::vector<std::pair<int, int>> arcs_of(const Matrix& a) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(a.size()); ++u)
    for (int v = 0; v < static_cast<int>(a.size()); ++v)
      if (a[u][v]) out.push_back({u, v});
  return out;
}

// Cayley table helpers: mul[a * n + b] = ab.
struct Table {
  int n;
  std::vector<int> mul;
  int at(int a, int b) const { return mul[a * n + b]; }
  int inv(int a) const {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0) return b;
    return -1;
  }
};

inline std::set<int> product(const Table& t, const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b) out.insert(t.at(x, y));
  return out;
}

// All bijections of the elements preserving the table (brute force).
inline std::vector<std::vector<int>> group_automorphisms(const Table& t) {
  std::vector<int> p(t.n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (p[0] != 0) continue;
    bool ok = true;
    for (int a = 0; a < t.n && ok; ++a)
      for (int b = 0; b < t.n && ok; ++b)
        if (p[t.at(a, b)] != t.at(p[a], p[b])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Arcs of the m-Cayley digraph with vertex g_i = i * n + g and arcs
// g_i -> (t g)_j for t in cells[i][j].
inline std::vector<std::pair<int, int>> mcayley_arcs(
    const Table& t, const std::vector<std::vector<std::vector<int>>>& cells) {
  const int m = static_cast<int>(cells.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int s : cells[i][j])
        for (int g = 0; g < t.n; ++g) out.push_back({i * t.n + g, j * t.n + t.at(s, g)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

#endif  // OMSR_TESTS_ORACLES_HPP_
