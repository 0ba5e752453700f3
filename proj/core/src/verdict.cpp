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

#include "omsr/verdict.hpp"

namespace omsr {

OmsrVerdict check_omsr(const ConnectionSets& t, const CheckOptions& options) {
  OmsrVerdict v;
  v.oriented = validate(t).oriented;
  MCayleyDigraph d = build(t);
  v.valency = is_regular(d.digraph());
  v.regular = v.valency.has_value();
  const int order = t.group().order();

  AutOptions ao;
  ao.brute_force_max_n = options.brute_force_max_n;
  ao.known = right_action_generators(d);
  if (options.early_exit) ao.order_limit = static_cast<std::uint64_t>(order);
  AutResult r = automorphism_search(d.digraph(), ao);
  v.aut_order = r.order;
  v.aut_order_is_bound = r.exceeded;
  v.is_omsr = v.oriented && v.regular && !r.exceeded && r.order == order;

  if (r.order > order || r.exceeded) {
    PermGroup rg(d.digraph().n(), right_action_generators(d));
    for (auto& gen : r.generators) {
      if (!rg.contains(gen)) {
        v.witness = gen;
        break;
      }
    }
  }
  if (!r.exceeded) {
    PermGroup aut(d.digraph().n(), r.generators);
    v.orbit_count = static_cast<int>(aut.orbits().size());
    v.stabilizer_order = aut.point_stabilizer_order(d.vertex(t.group().identity(), 0));
  }
  return v;
}

std::pair<bool, bool> haar_equivalence(const GroupPtr& g, const ElementSet& s,
                                       const ElementSet& t, const Permutation& sigma) {
  const int n = g->order();
  ElementSet empty(n);
  ConnectionSets cs(g, 1), ct(g, 1);
  // Cayley digraphs with loops are not representable; the identity in S or T
  // contributes a loop at every vertex, which every permutation preserves.
  ElementSet s0 = s, t0 = t;
  if (s0.contains(0)) s0.erase(0);
  if (t0.contains(0)) t0.erase(0);
  cs.set(0, 0, s0);
  ct.set(0, 0, t0);
  bool lhs = is_automorphism(build(cs).digraph(), sigma) && is_automorphism(build(ct).digraph(), sigma);
  MCayleyDigraph b = build(bicay(g, empty, empty, s, t));
  std::vector<int> img(2 * n);
  for (int x = 0; x < n; ++x) {
    img[x] = sigma[x];
    img[n + x] = n + sigma[x];
  }
  bool rhs = is_automorphism(b.digraph(), Permutation(std::move(img)));
  return {lhs, rhs};
}

}  // namespace omsr
