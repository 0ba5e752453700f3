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

#include "omsr/claims.hpp"

#include <sstream>

#include "omsr/catalog.hpp"
#include "omsr/constructions.hpp"

namespace omsr {

std::string ClaimReport::summary() const {
  std::ostringstream os;
  os << claim << " " << group << " m=" << m << " k=" << k;
  if (!branch.empty()) os << " (" << branch << ")";
  os << (matches() ? " match" : " MISMATCH") << "\n";
  for (std::size_t i = 0; i < measured.size(); ++i)
    os << "  part " << i << ": expected " << expected[i] << ", measured " << measured[i] << "\n";
  return os.str();
}

long triple_count(const FiniteGroup& g, const ElementSet& r) {
  long c = 0;
  auto el = r.elements();
  for (Element x : el)
    for (Element y : el)
      if (r.contains(g.mul(x, y))) ++c;
  return c;
}

std::vector<long> out_neighbourhood_arc_counts(const MCayleyDigraph& d) {
  std::vector<long> out;
  const Digraph& g = d.digraph();
  for (int i = 0; i < d.m(); ++i) {
    VertexSet nb = out_neighbors(g, d.vertex(d.source().group().identity(), i));
    out.push_back(arc_count(g, nb, nb));
  }
  return out;
}

ClaimReport claim_orr_lift(const GroupPtr& g, const ElementSet& r, Element a, int m) {
  ClaimReport rep;
  rep.claim = "orr_lift";
  rep.group = g->name();
  rep.m = m;
  rep.k = triple_count(*g, r);
  const long k = rep.k;
  rep.expected.assign(m, k);
  rep.expected[0] = m == 3 ? k + 2 : k + 1;
  rep.expected[1] = m == 3 ? k + 3 : k + 2;
  rep.expected[m - 1] = k + 1;
  rep.measured = out_neighbourhood_arc_counts(build(orr_lift_omsr(g, r, a, m)));
  return rep;
}

ClaimReport claim_gendihedral(const std::string& h, const ElementSet& r_h, Element a, int m) {
  const CatalogEntry& he = lookup(h);
  ClaimReport rep;
  rep.claim = "gendihedral";
  rep.group = "GD(" + he.name + ")";
  rep.m = m;
  rep.k = triple_count(*he.group, r_h);
  const long k = rep.k;
  if (m == 2) {
    bool sq = r_h.contains(he.group->mul(a, a));
    rep.branch = sq ? "a^2 in R" : "a^2 not in R";
    rep.expected = {sq ? k + 4 : k + 3, sq ? k + 2 : k + 1};
    rep.measured = out_neighbourhood_arc_counts(build(gendihedral_orr_o2sr(h, r_h, a)));
    return rep;
  }
  rep.expected.assign(m, k);
  rep.expected[0] = m == 3 ? k + 2 : k + 1;
  rep.expected[1] = m == 3 ? k + 1 : k + 2;
  rep.measured = out_neighbourhood_arc_counts(build(gendihedral_orr_omsr(h, r_h, a, m)));
  return rep;
}

}  // namespace omsr
