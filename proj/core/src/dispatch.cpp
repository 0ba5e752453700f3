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

#include "omsr/dispatch.hpp"

#include <algorithm>

#include "omsr/catalog.hpp"

namespace omsr {

std::string to_string(DispatchVerdict v) {
  switch (v) {
    case DispatchVerdict::kConstruction: return "construction";
    case DispatchVerdict::kNoOmsrByTheorem: return "no_omsr_by_theorem";
    case DispatchVerdict::kOutOfCatalog: return "out_of_catalog";
  }
  return "unknown";
}

bool is_generalized_dihedral_over_2(const std::string& group) {
  const CatalogEntry& e = lookup(group);
  return e.kind == GroupKind::kGenDihedral || e.elem_abelian_rank >= 2;
}

DispatchResult theorem_dispatch(const std::string& group, int m) {
  DispatchResult r;
  if (m < 1) throw std::invalid_argument("m must be positive");
  const CatalogEntry* e = nullptr;
  try {
    e = &lookup(group);
  } catch (const UnknownGroup&) {
    r.reason = "'" + group + "' is not in the catalog";
    return r;
  }
  const std::string& name = e->name;
  const int rank = e->elem_abelian_rank;
  auto no = [&](int branch, std::string why) {
    r.verdict = DispatchVerdict::kNoOmsrByTheorem;
    r.branch = branch;
    r.reason = std::move(why);
    return r;
  };
  auto yes = [&](std::string id, std::string why) {
    r.verdict = DispatchVerdict::kConstruction;
    r.branch = 1;
    r.construction = ConstructionId::parse(id);
    r.reason = std::move(why);
    return r;
  };
  const std::string ms = std::to_string(m);

  if (m == 1) {
    if (is_generalized_dihedral_over_2(name))
      return no(2, name + " is generalized dihedral of order greater than 2");
    if (e->exceptional) return no(2, name + " is one of the 11 exceptional groups");
    return yes("orr:G=" + name, name + " admits an ORR");
  }
  if (m == 2 && rank >= 0 && rank <= 4)
    return no(3, "m = 2 and " + name + " is Z2^n with n <= 4");
  if (m <= 6 && rank == 0) return no(4, "3 <= m <= 6 and G is trivial");

  if (rank == 0) return yes("trivial:m=" + ms, "trivial group, m >= 7");
  if (rank >= 1 && rank <= 4)
    return yes("z2_small:n=" + std::to_string(rank) + ",m=" + ms, "Z2^n with n <= 4, m >= 3");
  if (rank >= 5)
    return yes("z2_large:n=" + std::to_string(rank) + ",m=" + ms, "Z2^n with n >= 5");
  if (e->kind == GroupKind::kGenDihedral) {
    const auto& bases = gendihedral_noorr_bases();
    if (std::find(bases.begin(), bases.end(), e->base) != bases.end())
      return yes("gendihedral_noorr:H=" + e->base + ",m=" + ms,
                 "generalized dihedral over a base without an ORR");
    return yes("gendihedral_orr:H=" + e->base + ",m=" + ms,
               "generalized dihedral over a base with an ORR");
  }
  if (e->exceptional)
    return yes("exceptional:G=" + name + ",m=" + ms, "exceptional group, m >= 2");
  return yes("orr_lift:G=" + name + ",m=" + ms, name + " admits an ORR and has order >= 3");
}

}  // namespace omsr
