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

#include "omsr/coset_enumeration.hpp"

#include <deque>
#include <vector>

namespace omsr {

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class CosetTable {
 public:
  CosetTable(int generators, long capacity) : cols_(2 * generators), capacity_(capacity) {
    add_row();
  }

  int rows() const { return static_cast<int>(parent_.size()); }
  int live() const { return live_; }
  bool alive(int c) const { return parent_[c] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int cols() const { return cols_; }

  void define(int c, int x) {
    if (live_ >= capacity_)
      throw CosetTableOverflow("coset table exceeded " + std::to_string(capacity_) +
                               " live cosets");
    int d = add_row();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  // Scans relator r from coset c, recording a deduction or processing a
  // coincidence. Returns true if the table changed.
  bool scan(int c, const std::vector<int>& r) {
    const int n = static_cast<int>(r.size());
    int f = c, i = 0;
    while (i < n && at(f, r[i]) >= 0) f = at(f, r[i++]);
    if (i == n) {
      if (f != c) {
        coincidence(f, c);
        return true;
      }
      return false;
    }
    int b = c, j = n - 1;
    while (j >= i && at(b, r[j] ^ 1) >= 0) b = at(b, r[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
      return true;
    }
    if (j == i) {
      at(f, r[i]) = b;
      at(b, r[i] ^ 1) = f;
      return true;
    }
    return false;
  }

 private:
  int add_row() {
    int d = rows();
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return d;
  }

  int rep(int k) {
    int l = k;
    while (parent_[l] != l) l = parent_[l];
    while (parent_[k] != l) {
      int next = parent_[k];
      parent_[k] = l;
      k = next;
    }
    return l;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        if (at(f, x ^ 1) == e) at(f, x ^ 1) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  int cols_;
  long capacity_;
  int live_ = 0;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

FiniteGroup coset_enumerate(const Presentation& p, int order_bound, std::string name,
                            const CosetEnumerationOptions& options) {
  const int k = static_cast<int>(p.generators.size());
  std::vector<std::vector<int>> relators;
  for (const Word& w : p.relators) {
    std::vector<int> r;
    for (int l : w) {
      if (l == 0 || (l > 0 ? l : -l) > k)
        throw std::invalid_argument("relator references an undeclared generator");
      r.push_back(column(l));
    }
    if (!r.empty()) relators.push_back(std::move(r));
  }
  CosetTable t(k, static_cast<long>(options.capacity_factor) * order_bound);

  auto settle = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < t.rows(); ++c) {
        for (const auto& r : relators) {
          if (!t.alive(c)) break;
          if (t.scan(c, r)) changed = true;
        }
      }
    }
  };

  settle();
  for (;;) {
    int c = -1, x = -1;
    for (int i = 0; i < t.rows() && c < 0; ++i) {
      if (!t.alive(i)) continue;
      for (int j = 0; j < t.cols(); ++j) {
        if (t.at(i, j) < 0) {
          c = i;
          x = j;
          break;
        }
      }
    }
    if (c < 0) break;
    t.define(c, x);
    settle();
  }

  if (t.live() > order_bound)
    throw CosetTableOverflow("presented group has order " + std::to_string(t.live()) +
                             " > bound " + std::to_string(order_bound));

  std::vector<int> index(t.rows(), -1);
  std::vector<int> cosets;
  for (int c = 0; c < t.rows(); ++c) {
    if (t.alive(c)) {
      index[c] = static_cast<int>(cosets.size());
      cosets.push_back(c);
    }
  }
  const int n = static_cast<int>(cosets.size());
  // Breadth-first words (as column sequences) reaching each coset from 0.
  std::vector<std::vector<int>> words(n);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int x = 0; x < t.cols(); ++x) {
      int b = index[t.at(cosets[a], x)];
      if (seen[b]) continue;
      seen[b] = 1;
      words[b] = words[a];
      words[b].push_back(x);
      queue.push_back(b);
    }
  }
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = cosets[a];
      for (int x : words[b]) c = t.at(c, x);
      mul[a * n + b] = index[c];
    }
  }
  FiniteGroup::Generators gens;
  for (int g = 0; g < k; ++g) gens.push_back({p.generators[g], index[t.at(cosets[0], 2 * g)]});
  if (name.empty()) name = "<presented>";
  return FiniteGroup(std::move(name), n, std::move(mul), std::move(gens));
}

}  // namespace omsr
