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

#ifndef OMSR_DIGRAPH_HPP_
#define OMSR_DIGRAPH_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace omsr {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

// Loopless digraph with sorted out- and in-adjacency in compressed form.
class Digraph {
 public:
  Digraph() = default;
  // Duplicate arcs collapse; loops and out-of-range endpoints throw.
  Digraph(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  std::size_t arc_count() const { return out_adj_.size(); }
  std::span<const Vertex> out_neighbors(Vertex x) const;
  std::span<const Vertex> in_neighbors(Vertex x) const;
  int out_degree(Vertex x) const { return out_off_[x + 1] - out_off_[x]; }
  int in_degree(Vertex x) const { return in_off_[x + 1] - in_off_[x]; }
  bool has_arc(Vertex u, Vertex v) const;
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph& o) const;

 private:
  int n_ = 0;
  std::vector<int> out_off_{0}, in_off_{0};
  std::vector<Vertex> out_adj_, in_adj_;
};

VertexSet out_neighbors(const Digraph& g, Vertex x);
VertexSet in_neighbors(const Digraph& g, Vertex x);

// Number of arcs (u, v) with u in X and v in Y.
long arc_count(const Digraph& g, const VertexSet& x, const VertexSet& y);

struct InducedSubgraph {
  Digraph digraph;
  VertexSet index_map;  // new vertex i corresponds to index_map[i]
};
// Throws std::invalid_argument for an empty X.
InducedSubgraph induced(const Digraph& g, const VertexSet& x);

bool is_oriented(const Digraph& g);
// Common in/out valency, if every vertex has in-degree = out-degree = d.
std::optional<int> is_regular(const Digraph& g);

using Triple = std::array<Vertex, 3>;
// Directed 3-cycles (a, b, c) with a the least vertex; sorted.
std::vector<Triple> oriented_3cycles(const Digraph& g);
VertexSet cycle_support(const std::vector<Triple>& cycles);
std::vector<Triple> cycles_through(const std::vector<Triple>& cycles, const VertexSet& s);
// Vertices of the cycles in `cycles` together with all their in- and
// out-neighbours.
VertexSet closed_neighborhood(const Digraph& g, const std::vector<Triple>& cycles);

bool is_connected_underlying(const Digraph& g);
// Number of weakly connected components.
int underlying_components(const Digraph& g);

// True iff the arcs of the closed walks (each listed without repeating its
// start) are pairwise distinct and together are exactly the arc set of g.
bool arcs_partition_into(const Digraph& g, const std::vector<std::vector<Vertex>>& walks);

// Graphviz DOT text. `labels` may be empty (vertex indices are used).
std::string to_dot(const Digraph& g, const std::vector<std::string>& labels = {});
// Reads the subset of DOT emitted by to_dot.
Digraph parse_dot(const std::string& text, std::vector<std::string>* labels = nullptr);

VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Digraph& g);

}  // namespace omsr

#endif  // OMSR_DIGRAPH_HPP_
