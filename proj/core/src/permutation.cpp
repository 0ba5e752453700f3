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

#include "omsr/permutation.hpp"

#include <stdexcept>

#include "omsr/digraph.hpp"

namespace omsr {

Permutation::Permutation(int n) : images_(n) {
  for (int i = 0; i < n; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> f;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) f.push_back(i);
  return f;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> r(a.degree());
  for (int i = 0; i < a.degree(); ++i) r[i] = b[a[i]];
  return Permutation(std::move(r));
}

bool is_automorphism(const Digraph& g, const Permutation& p) {
  if (p.degree() != g.n()) return false;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.out_degree(u) != g.out_degree(p[u])) return false;
    for (Vertex v : g.out_neighbors(u))
      if (!g.has_arc(p[u], p[v])) return false;
  }
  return true;
}

}  // namespace omsr
