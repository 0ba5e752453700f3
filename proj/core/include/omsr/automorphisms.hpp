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

#ifndef OMSR_AUTOMORPHISMS_HPP_
#define OMSR_AUTOMORPHISMS_HPP_

#include <cstdint>
#include <vector>

#include "omsr/digraph.hpp"
#include "omsr/perm_group.hpp"
#include "omsr/permutation.hpp"

namespace omsr {

struct AutOptions {
  // Digraphs with at most this many vertices are handled by enumerating all
  // n! permutations. Zero disables the fallback.
  int brute_force_max_n = 6;
  // Automorphisms known in advance (for instance the right regular action of
  // an m-Cayley digraph). Each is verified before use.
  std::vector<Permutation> known;
  // If positive, the search stops as soon as the group order is known to
  // exceed this value.
  std::uint64_t order_limit = 0;
};

struct AutResult {
  std::vector<Permutation> generators;
  BigInt order = 1;       // exact unless `exceeded`, then a lower bound
  bool exceeded = false;  // order > options.order_limit
  long nodes = 0;         // refinement calls, for instrumentation
};

// Individualization-refinement search for generators of Aut(g). Output is a
// deterministic function of g and the options.
AutResult automorphism_search(const Digraph& g, const AutOptions& options = {});

PermGroup automorphism_group(const Digraph& g, const AutOptions& options = {});

std::vector<Permutation> brute_force_automorphisms(const Digraph& g);

bool is_vertex_transitive(const Digraph& g);

// Label-invariant equitable refinement of `color` (cell start indices).
// Exposed for tests and benchmarks.
std::vector<int> refine_colors(const Digraph& g, std::vector<int> color,
                               std::uint64_t* trace = nullptr);

}  // namespace omsr

#endif  // OMSR_AUTOMORPHISMS_HPP_
