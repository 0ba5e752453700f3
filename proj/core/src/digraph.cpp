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

#include "omsr/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace omsr {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  out_off_.assign(n + 1, 0);
  in_off_.assign(n + 1, 0);
  for (auto [u, v] : arcs) {
    ++out_off_[u + 1];
    ++in_off_[v + 1];
  }
  std::partial_sum(out_off_.begin(), out_off_.end(), out_off_.begin());
  std::partial_sum(in_off_.begin(), in_off_.end(), in_off_.begin());
  out_adj_.resize(arcs.size());
  in_adj_.resize(arcs.size());
  std::vector<int> fill_in(in_off_.begin(), in_off_.end() - 1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out_adj_[i] = arcs[i].second;
    in_adj_[fill_in[arcs[i].second]++] = arcs[i].first;
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex x) const {
  return {out_adj_.data() + out_off_[x], static_cast<std::size_t>(out_degree(x))};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex x) const {
  return {in_adj_.data() + in_off_[x], static_cast<std::size_t>(in_degree(x))};
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto s = out_neighbors(u);
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> a;
  a.reserve(out_adj_.size());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out_neighbors(u)) a.push_back({u, v});
  return a;
}

bool Digraph::operator==(const Digraph& o) const {
  return n_ == o.n_ && out_off_ == o.out_off_ && out_adj_ == o.out_adj_;
}

VertexSet out_neighbors(const Digraph& g, Vertex x) {
  auto s = g.out_neighbors(x);
  return VertexSet(s.begin(), s.end());
}

VertexSet in_neighbors(const Digraph& g, Vertex x) {
  auto s = g.in_neighbors(x);
  return VertexSet(s.begin(), s.end());
}

long arc_count(const Digraph& g, const VertexSet& x, const VertexSet& y) {
  std::vector<char> in_y(g.n(), 0);
  for (Vertex v : y) in_y.at(v) = 1;
  long c = 0;
  for (Vertex u : x)
    for (Vertex v : g.out_neighbors(u)) c += in_y[v];
  return c;
}

InducedSubgraph induced(const Digraph& g, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("induced: empty vertex set");
  VertexSet map = x;
  std::sort(map.begin(), map.end());
  map.erase(std::unique(map.begin(), map.end()), map.end());
  std::vector<int> pos(g.n(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) pos.at(map[i]) = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (Vertex v : g.out_neighbors(map[i]))
      if (pos[v] >= 0) arcs.push_back({static_cast<int>(i), pos[v]});
  return {Digraph(static_cast<int>(map.size()), std::move(arcs)), std::move(map)};
}

bool is_oriented(const Digraph& g) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.out_neighbors(u))
      if (v > u && g.has_arc(v, u)) return false;
  return true;
}

std::optional<int> is_regular(const Digraph& g) {
  if (g.n() == 0) return 0;
  int d = g.out_degree(0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.out_degree(v) != d || g.in_degree(v) != d) return std::nullopt;
  return d;
}

std::vector<Triple> oriented_3cycles(const Digraph& g) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b : g.out_neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.out_neighbors(b)) {
        if (c <= a) continue;
        if (g.has_arc(c, a)) out.push_back({a, b, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet cycle_support(const std::vector<Triple>& cycles) {
  std::set<Vertex> s;
  for (auto& t : cycles) s.insert(t.begin(), t.end());
  return VertexSet(s.begin(), s.end());
}

std::vector<Triple> cycles_through(const std::vector<Triple>& cycles, const VertexSet& s) {
  std::vector<Triple> out;
  for (auto& t : cycles)
    for (Vertex v : t)
      if (std::binary_search(s.begin(), s.end(), v)) {
        out.push_back(t);
        break;
      }
  return out;
}

VertexSet closed_neighborhood(const Digraph& g, const std::vector<Triple>& cycles) {
  std::set<Vertex> s;
  for (auto& t : cycles) {
    for (Vertex v : t) {
      s.insert(v);
      for (Vertex w : g.out_neighbors(v)) s.insert(w);
      for (Vertex w : g.in_neighbors(v)) s.insert(w);
    }
  }
  return VertexSet(s.begin(), s.end());
}

int underlying_components(const Digraph& g) {
  std::vector<char> seen(g.n(), 0);
  int comps = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto nb : {g.out_neighbors(u), g.in_neighbors(u)})
        for (Vertex v : nb)
          if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
    }
  }
  return comps;
}

bool is_connected_underlying(const Digraph& g) { return underlying_components(g) <= 1; }

bool arcs_partition_into(const Digraph& g, const std::vector<std::vector<Vertex>>& walks) {
  std::set<Arc> used;
  for (auto& w : walks) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Arc a{w[i], w[(i + 1) % w.size()]};
      if (a.first < 0 || a.first >= g.n() || !g.has_arc(a.first, a.second)) return false;
      if (!used.insert(a).second) return false;
    }
  }
  return used.size() == g.arc_count();
}

std::string to_dot(const Digraph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v << " [label=\""
       << (labels.empty() ? std::to_string(v) : labels.at(v)) << "\"];\n";
  }
  for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

Digraph parse_dot(const std::string& text, std::vector<std::string>* labels) {
  static const std::regex node(R"re(^\s*(\d+)\s*\[label="([^"]*)"\];\s*$)re");
  static const std::regex edge(R"(^\s*(\d+)\s*->\s*(\d+);\s*$)");
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<int, std::string>> nodes;
  std::vector<Arc> arcs;
  std::smatch m;
  while (std::getline(is, line)) {
    if (std::regex_match(line, m, node)) {
      nodes.push_back({std::stoi(m[1]), m[2]});
    } else if (std::regex_match(line, m, edge)) {
      arcs.push_back({std::stoi(m[1]), std::stoi(m[2])});
    }
  }
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].first != static_cast<int>(i))
      throw std::invalid_argument("parse_dot: vertices are not 0..n-1");
  if (labels) {
    labels->clear();
    for (auto& p : nodes) labels->push_back(p.second);
  }
  return Digraph(static_cast<int>(nodes.size()), std::move(arcs));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet all_vertices(const Digraph& g) {
  VertexSet v(g.n());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace omsr
