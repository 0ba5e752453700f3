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

#ifndef OMSR_MCAYLEY_HPP_
#define OMSR_MCAYLEY_HPP_

#include <string>
#include <vector>

#include "omsr/digraph.hpp"
#include "omsr/group.hpp"
#include "omsr/permutation.hpp"

namespace omsr {

// The m x m family T_{i,j} of subsets of G defining Cay(G, T_{i,j}).
class ConnectionSets {
 public:
  ConnectionSets(GroupPtr group, int m);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int m() const { return m_; }

  const ElementSet& at(int i, int j) const;
  void set(int i, int j, ElementSet s);
  // Indices are taken modulo m, so callers may write set_mod(i, i + 1, ...).
  void set_mod(int i, int j, ElementSet s);
  void set_mod(int i, int j, const std::vector<std::string>& words);

  // Out-degree of part i and in-degree of part j in the built digraph.
  int row_sum(int i) const;
  int col_sum(int j) const;

  // Free-form provenance notes carried into certificates.
  std::vector<std::string> notes;

  bool operator==(const ConnectionSets& o) const;

 private:
  GroupPtr group_;
  int m_;
  std::vector<ElementSet> cells_;
};

struct ValidationReport {
  bool oriented = true;
  bool loop_free = true;
};
ValidationReport validate(const ConnectionSets& t);

class MCayleyDigraph {
 public:
  const Digraph& digraph() const { return digraph_; }
  const ConnectionSets& source() const { return source_; }
  int m() const { return source_.m(); }
  int group_order() const { return source_.group().order(); }
  Vertex vertex(Element g, int part) const { return part * group_order() + g; }
  Element element_of(Vertex v) const { return v % group_order(); }
  int part_of(Vertex v) const { return v / group_order(); }
  // "g_i" labels using the group's display names.
  std::vector<std::string> labels() const;

 private:
  friend MCayleyDigraph build(const ConnectionSets& t);
  MCayleyDigraph(Digraph d, ConnectionSets s) : digraph_(std::move(d)), source_(std::move(s)) {}
  Digraph digraph_;
  ConnectionSets source_;
};

// Throws std::invalid_argument if some T_{i,i} contains the identity.
MCayleyDigraph build(const ConnectionSets& t);

ConnectionSets bicay(GroupPtr g, const ElementSet& r, const ElementSet& l, const ElementSet& s,
                     const ElementSet& t);

// R(g): x_i -> (xg)_i.
Permutation right_action(const MCayleyDigraph& d, Element g);
std::vector<Permutation> right_action_generators(const MCayleyDigraph& d);

VertexSet part_set(const MCayleyDigraph& d, int i);
VertexSet elem_set(const MCayleyDigraph& d, const ElementSet& h, int i);

}  // namespace omsr

#endif  // OMSR_MCAYLEY_HPP_
