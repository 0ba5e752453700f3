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

#include "omsr/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace omsr {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Refiner {
 public:
  explicit Refiner(const Digraph& g) : g_(g), n_(g.n()), idx_(n_), off_(n_ + 1) {}

  std::vector<int> refine(std::vector<int> color, std::uint64_t* trace) {
    std::uint64_t h = 0x1234567ULL;
    int cells = count_cells(color);
    for (;;) {
      sig_.clear();
      for (Vertex v = 0; v < n_; ++v) {
        off_[v] = static_cast<int>(sig_.size());
        std::size_t a = sig_.size();
        for (Vertex w : g_.out_neighbors(v)) sig_.push_back(color[w]);
        std::sort(sig_.begin() + a, sig_.end());
        sig_.push_back(-1);
        std::size_t b = sig_.size();
        for (Vertex w : g_.in_neighbors(v)) sig_.push_back(color[w]);
        std::sort(sig_.begin() + b, sig_.end());
      }
      off_[n_] = static_cast<int>(sig_.size());
      std::iota(idx_.begin(), idx_.end(), 0);
      auto less = [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return std::lexicographical_compare(sig_.begin() + off_[a], sig_.begin() + off_[a + 1],
                                            sig_.begin() + off_[b], sig_.begin() + off_[b + 1]);
      };
      std::stable_sort(idx_.begin(), idx_.end(), less);
      std::vector<int> next(n_);
      int new_cells = 0;
      for (int i = 0; i < n_;) {
        int j = i + 1;
        while (j < n_ && !less(idx_[i], idx_[j])) ++j;
        for (int k = i; k < j; ++k) next[idx_[k]] = i;
        std::uint64_t sh = 0;
        for (int k = off_[idx_[i]]; k < off_[idx_[i] + 1]; ++k)
          sh = mix(sh, static_cast<std::uint64_t>(sig_[k] + 2));
        h = mix(mix(mix(h, static_cast<std::uint64_t>(i)), static_cast<std::uint64_t>(j - i)), sh);
        ++new_cells;
        i = j;
      }
      color = std::move(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
    if (trace) *trace = h;
    return color;
  }

  static int count_cells(const std::vector<int>& color) {
    std::vector<char> start(color.size(), 0);
    int c = 0;
    for (int x : color)
      if (!start[x]) {
        start[x] = 1;
        ++c;
      }
    return c;
  }

 private:
  const Digraph& g_;
  int n_;
  std::vector<int> idx_;
  std::vector<int> off_;
  std::vector<int> sig_;
};

struct Target {
  int start = -1;
  std::vector<Vertex> cell;  // ascending
};

// First smallest non-singleton cell; start == -1 if the partition is discrete.
Target target_cell(const std::vector<int>& color) {
  const int n = static_cast<int>(color.size());
  std::vector<int> size(n, 0);
  for (int c : color) ++size[c];
  Target t;
  int best = n + 1;
  for (int c = 0; c < n; ++c) {
    if (size[c] >= 2 && size[c] < best) {
      best = size[c];
      t.start = c;
    }
  }
  if (t.start >= 0)
    for (Vertex v = 0; v < n; ++v)
      if (color[v] == t.start) t.cell.push_back(v);
  return t;
}

std::vector<int> individualize(std::vector<int> color, Vertex v) {
  const int c = color[v];
  for (auto& x : color)
    if (x == c) x = c + 1;
  color[v] = c;
  return color;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : p_(n), flag_(n, 0) { std::iota(p_.begin(), p_.end(), 0); }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    p_[b] = a;
    flag_[a] |= flag_[b];
  }
  void add(const Permutation& g) {
    for (int x = 0; x < static_cast<int>(p_.size()); ++x) unite(x, g[x]);
  }
  char& flag(int x) { return flag_[find(x)]; }

 private:
  std::vector<int> p_;
  std::vector<char> flag_;
};

bool fixes_all(const Permutation& g, const std::vector<Vertex>& pts) {
  for (Vertex v : pts)
    if (g[v] != v) return false;
  return true;
}

class Search {
 public:
  Search(const Digraph& g, const AutOptions& opt) : g_(g), opt_(opt), refiner_(g) {}

  AutResult run() {
    const int n = g_.n();
    for (const auto& k : opt_.known) {
      if (!is_automorphism(g_, k)) throw std::invalid_argument("known permutation is not an automorphism");
      if (!k.is_identity()) result_.generators.push_back(k);
    }
    if (n == 0) return result_;

    // First path.
    std::vector<std::vector<int>> colors;
    std::vector<Target> targets;
    std::uint64_t tr;
    colors.push_back(refine(std::vector<int>(n, 0), &tr));
    traces_.push_back(tr);
    for (;;) {
      Target t = target_cell(colors.back());
      if (t.start < 0) break;
      targets.push_back(t);
      path_.push_back(t.cell.front());
      colors.push_back(refine(individualize(colors.back(), t.cell.front()), &tr));
      traces_.push_back(tr);
    }
    leaf_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) leaf_[colors.back()[v]] = v;
    const int depth = static_cast<int>(path_.size());
    starts_.clear();
    for (auto& t : targets) starts_.push_back(t.start);

    for (int d = depth - 1; d >= 0; --d) {
      std::vector<Vertex> prefix(path_.begin(), path_.begin() + d);
      UnionFind uf(n);
      for (auto& gen : result_.generators)
        if (fixes_all(gen, prefix)) uf.add(gen);
      const Vertex vd = path_[d];
      for (Vertex w : targets[d].cell) {
        if (w == vd || uf.find(w) == uf.find(vd) || uf.flag(w)) continue;
        std::optional<Permutation> found;
        std::vector<int> child = refine(individualize(colors[d], w), &tr);
        if (tr == traces_[d + 1]) {
          std::vector<Vertex> seq = prefix;
          seq.push_back(w);
          found = descend(child, d + 1, seq);
        }
        if (found) {
          result_.generators.push_back(*found);
          uf.add(*found);
        } else {
          uf.flag(w) = 1;
        }
      }
      long orbit = 0;
      for (Vertex w : targets[d].cell) orbit += uf.find(w) == uf.find(vd);
      result_.order *= orbit;
      if (opt_.order_limit && result_.order > opt_.order_limit) {
        result_.exceeded = true;
        return result_;
      }
    }
    return result_;
  }

 private:
  std::vector<int> refine(std::vector<int> color, std::uint64_t* tr) {
    ++result_.nodes;
    return refiner_.refine(std::move(color), tr);
  }

  std::optional<Permutation> descend(const std::vector<int>& color, int d,
                                     std::vector<Vertex>& seq) {
    Target t = target_cell(color);
    if (t.start < 0) {
      if (d != static_cast<int>(path_.size())) return std::nullopt;
      std::vector<int> img(g_.n());
      for (Vertex v = 0; v < g_.n(); ++v) img[v] = leaf_[color[v]];
      Permutation p(std::move(img));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    if (d >= static_cast<int>(path_.size()) || t.start != starts_[d]) return std::nullopt;
    UnionFind uf(g_.n());
    for (auto& gen : result_.generators)
      if (fixes_all(gen, seq)) uf.add(gen);
    for (Vertex u : t.cell) {
      if (uf.flag(u)) continue;
      uf.flag(u) = 1;
      std::uint64_t tr;
      std::vector<int> child = refine(individualize(color, u), &tr);
      if (tr != traces_[d + 1]) continue;
      seq.push_back(u);
      auto r = descend(child, d + 1, seq);
      seq.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  const Digraph& g_;
  const AutOptions& opt_;
  Refiner refiner_;
  AutResult result_;
  std::vector<Vertex> path_;
  std::vector<std::uint64_t> traces_;
  std::vector<int> starts_;
  std::vector<Vertex> leaf_;
};

AutResult brute_force_result(const Digraph& g, const AutOptions& opt) {
  AutResult r;
  auto all = brute_force_automorphisms(g);
  r.order = static_cast<long>(all.size());
  if (opt.order_limit && r.order > opt.order_limit) r.exceeded = true;
  PermGroup h(g.n());
  for (auto& p : all) {
    if (h.contains(p)) continue;
    r.generators.push_back(p);
    h = PermGroup(g.n(), r.generators);
  }
  return r;
}

}  // namespace

std::vector<int> refine_colors(const Digraph& g, std::vector<int> color, std::uint64_t* trace) {
  return Refiner(g).refine(std::move(color), trace);
}

AutResult automorphism_search(const Digraph& g, const AutOptions& options) {
  if (g.n() <= options.brute_force_max_n) {
    for (const auto& k : options.known)
      if (!is_automorphism(g, k)) throw std::invalid_argument("known permutation is not an automorphism");
    return brute_force_result(g, options);
  }
  return Search(g, options).run();
}

PermGroup automorphism_group(const Digraph& g, const AutOptions& options) {
  AutOptions o = options;
  o.order_limit = 0;
  AutResult r = automorphism_search(g, o);
  PermGroup p(g.n(), std::move(r.generators));
  if (p.order() != r.order) throw std::logic_error("automorphism search: order mismatch");
  return p;
}

std::vector<Permutation> brute_force_automorphisms(const Digraph& g) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation q(p);
    if (is_automorphism(g, q)) out.push_back(q);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_vertex_transitive(const Digraph& g) {
  if (g.n() <= 1) return true;
  return automorphism_group(g).orbit(0).size() == static_cast<std::size_t>(g.n());
}

}  // namespace omsr
