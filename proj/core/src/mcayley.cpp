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

#include "omsr/mcayley.hpp"

#include <stdexcept>

namespace omsr {

ConnectionSets::ConnectionSets(GroupPtr group, int m) : group_(std::move(group)), m_(m) {
  if (!group_) throw std::invalid_argument("ConnectionSets: null group");
  if (m < 1) throw std::invalid_argument("ConnectionSets: m must be positive");
  cells_.assign(static_cast<std::size_t>(m) * m, ElementSet(group_->order()));
}

const ElementSet& ConnectionSets::at(int i, int j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::out_of_range("cell index");
  return cells_[i * m_ + j];
}

void ConnectionSets::set(int i, int j, ElementSet s) {
  if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::out_of_range("cell index");
  if (s.universe() != group_->order()) throw std::invalid_argument("cell over wrong group");
  cells_[i * m_ + j] = std::move(s);
}

void ConnectionSets::set_mod(int i, int j, ElementSet s) {
  set(((i % m_) + m_) % m_, ((j % m_) + m_) % m_, std::move(s));
}

void ConnectionSets::set_mod(int i, int j, const std::vector<std::string>& words) {
  set_mod(i, j, group_->parse_set(words));
}

int ConnectionSets::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < m_; ++j) s += at(i, j).size();
  return s;
}

int ConnectionSets::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < m_; ++i) s += at(i, j).size();
  return s;
}

bool ConnectionSets::operator==(const ConnectionSets& o) const {
  return m_ == o.m_ && group_->table() == o.group_->table() && cells_ == o.cells_;
}

ValidationReport validate(const ConnectionSets& t) {
  ValidationReport r;
  const FiniteGroup& g = t.group();
  for (int i = 0; i < t.m(); ++i) {
    if (t.at(i, i).contains(g.identity())) r.loop_free = false;
    for (int j = i; j < t.m(); ++j)
      if (t.at(i, j).intersects(set_inverse(g, t.at(j, i)))) r.oriented = false;
  }
  return r;
}

MCayleyDigraph build(const ConnectionSets& t) {
  if (!validate(t).loop_free) throw std::invalid_argument("build: identity in a diagonal cell");
  const FiniteGroup& g = t.group();
  const int n = g.order();
  std::vector<Arc> arcs;
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.m(); ++j)
      for (Element s : t.at(i, j).elements())
        for (Element x = 0; x < n; ++x) arcs.push_back({i * n + x, j * n + g.mul(s, x)});
  return MCayleyDigraph(Digraph(t.m() * n, std::move(arcs)), t);
}

std::vector<std::string> MCayleyDigraph::labels() const {
  std::vector<std::string> out;
  const FiniteGroup& g = source_.group();
  for (Vertex v = 0; v < digraph_.n(); ++v)
    out.push_back(g.display_name(element_of(v)) + "_" + std::to_string(part_of(v)));
  return out;
}

ConnectionSets bicay(GroupPtr g, const ElementSet& r, const ElementSet& l, const ElementSet& s,
                     const ElementSet& t) {
  ConnectionSets c(std::move(g), 2);
  c.set(0, 0, r);
  c.set(1, 1, l);
  c.set(0, 1, s);
  c.set(1, 0, t);
  return c;
}

Permutation right_action(const MCayleyDigraph& d, Element g) {
  const FiniteGroup& grp = d.source().group();
  const int n = grp.order();
  std::vector<int> img(d.digraph().n());
  for (Vertex v = 0; v < d.digraph().n(); ++v)
    img[v] = d.part_of(v) * n + grp.mul(d.element_of(v), g);
  return Permutation(std::move(img));
}

std::vector<Permutation> right_action_generators(const MCayleyDigraph& d) {
  std::vector<Permutation> out;
  for (auto& [label, e] : d.source().group().generators()) out.push_back(right_action(d, e));
  return out;
}

VertexSet part_set(const MCayleyDigraph& d, int i) {
  if (i < 0 || i >= d.m()) throw std::out_of_range("part index");
  VertexSet v;
  for (Element g = 0; g < d.group_order(); ++g) v.push_back(d.vertex(g, i));
  return v;
}

VertexSet elem_set(const MCayleyDigraph& d, const ElementSet& h, int i) {
  if (i < 0 || i >= d.m()) throw std::out_of_range("part index");
  VertexSet v;
  for (Element g : h.elements()) v.push_back(d.vertex(g, i));
  return v;
}

}  // namespace omsr
