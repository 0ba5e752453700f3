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

#include "omsr/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omsr {

namespace {

int first_moved(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");

  auto recompute = [this](Level& L) {
    L.orbit.assign(1, L.point);
    L.where.assign(degree_, -1);
    L.transversal.assign(1, Permutation(degree_));
    L.where[L.point] = 0;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      int p = L.orbit[k];
      for (auto& s : L.gens) {
        int q = s[p];
        if (L.where[q] >= 0) continue;
        L.where[q] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(q);
        L.transversal.push_back(L.transversal[k] * s);
      }
    }
  };

  // Initial base: every non-identity generator moves some base point.
  std::vector<int> base;
  for (auto& g : generators_) {
    if (g.is_identity()) continue;
    bool moves = false;
    for (int b : base) moves = moves || g[b] != b;
    if (!moves) base.push_back(first_moved(g));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level L;
    L.point = base[i];
    for (auto& g : generators_) {
      bool fixes = !g.is_identity();
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
      if (fixes) L.gens.push_back(g);
    }
    recompute(L);
    levels_.push_back(std::move(L));
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool stable = true;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && stable; ++k) {
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const Level& L = levels_[i];
        int p = L.orbit[k];
        int q = L.gens[si][p];
        Permutation h = L.transversal[k] * L.gens[si] * L.transversal[L.where[q]].inverse();
        std::size_t j = sift(i + 1, h);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) {
          Level n;
          n.point = first_moved(h);
          levels_.push_back(std::move(n));
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          recompute(levels_[l]);
        }
        i = static_cast<long>(j);
        stable = false;
        break;
      }
    }
    if (stable) --i;
  }
}

std::size_t PermGroup::sift(std::size_t i, Permutation& h) const {
  for (; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    int p = h[L.point];
    if (L.where[p] < 0) return i;
    h = h * L.transversal[L.where[p]].inverse();
  }
  return levels_.size();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (auto& L : levels_) b.push_back(L.point);
  return b;
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (auto& L : levels_) o *= L.orbit.size();
  return o;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation h = p;
  return sift(0, h) == levels_.size() && h.is_identity();
}

std::vector<int> PermGroup::orbit(int v) const {
  std::vector<int> o{v};
  std::vector<char> seen(degree_, 0);
  seen[v] = 1;
  for (std::size_t k = 0; k < o.size(); ++k)
    for (auto& g : generators_) {
      int w = g[o[k]];
      if (!seen[w]) {
        seen[w] = 1;
        o.push_back(w);
      }
    }
  std::sort(o.begin(), o.end());
  return o;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    auto o = orbit(v);
    for (int w : o) seen[w] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_semiregular() const {
  BigInt o = order();
  for (auto& orb : orbits())
    if (BigInt(orb.size()) != o) return false;
  return true;
}

BigInt PermGroup::point_stabilizer_order(int v) const {
  return order() / BigInt(orbit(v).size());
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > BigInt(limit)) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> out{Permutation(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    for (auto& g : out)
      for (auto& t : it->transversal) next.push_back(g * t);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace omsr
