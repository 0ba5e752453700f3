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

#ifndef OMSR_CONSTRUCTIONS_HPP_
#define OMSR_CONSTRUCTIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omsr/mcayley.hpp"

namespace omsr {

// One cell assignment T_{i,j} = {words}; indices are taken mod m
// and repeated entries for the same cell are united.
struct TableEntry {
  int i;
  int j;
  std::vector<std::string> words;
  bool operator==(const TableEntry&) const = default;
};
using Table = std::vector<TableEntry>;

// Replaces `from` by `to`; a missing `from` adds `to`, a missing `to` drops `from`.
struct TableEdit {
  std::optional<TableEntry> from;
  std::optional<TableEntry> to;
};

ConnectionSets from_table(GroupPtr g, int m, const Table& table);
Table apply_edits(Table table, const std::vector<TableEdit>& edits);
std::string describe(const TableEdit& edit);

// ORR lift. R is an ORR connection set of G and a is in R.
ConnectionSets orr_lift_o2sr(GroupPtr g, const ElementSet& r, Element a);
ConnectionSets orr_lift_omsr(GroupPtr g, const ElementSet& r, Element a, int m);

// Trivial group, m >= 7.
Table trivial_literal_table(int m);  // 7 <= m <= 11, unrepaired
std::vector<TableEdit> trivial_repairs(int m);
// Three closed walks through the parts for m >= 12.
std::vector<std::vector<int>> trivial_cycles(int m);
ConnectionSets trivial_omsr(int m);

// Z2^n for 1 <= n <= 4, m >= 3 (valency 2, valency 3 for n = 4, m <= 11).
Table z2_small_literal_table(int n, int m);  // 3 <= m <= 11, unrepaired
std::vector<TableEdit> z2_small_repairs(int n, int m);
ConnectionSets z2_small_omsr(int n, int m);

// Z2^n for n >= 5.
struct Z2LargeSets {
  GroupPtr group;
  ElementSet s, r, t;
};
Z2LargeSets z2_large_sets(int n);
ConnectionSets z2_large_o2sr(int n);
ConnectionSets z2_large_omsr(int n, int m);

// GD(H) where H has an ORR R_H containing a. `h` is a catalog name.
// m = 2 uses L = R, as in the neighbourhoods worked out for it; `literal`
// selects the L = R^-1 of the stated BiCay instead.
ConnectionSets gendihedral_orr_o2sr(const std::string& h, const ElementSet& r_h, Element a,
                                    bool literal = false);
ConnectionSets gendihedral_orr_omsr(const std::string& h, const ElementSet& r_h, Element a,
                                    int m);

struct RLSets {
  std::vector<std::string> r;
  std::vector<std::string> l;
};
// GD(H) for the six H without an ORR. `literal` selects R = {x, xb} for
// Z4xZ2 and Z3^2, which is not a valid connection set.
const std::vector<std::string>& gendihedral_noorr_bases();
RLSets gendihedral_noorr_sets(const std::string& h, bool literal = false);
ConnectionSets gendihedral_noorr_omsr(const std::string& h, int m, bool literal = false);

// The eleven exceptional groups. For H1, H2, H3 and D4oD4 the literal sets
// are not inverse-free; `literal` selects them anyway.
RLSets exceptional_sets(const std::string& g, bool literal = false);
bool exceptional_sets_substituted(const std::string& g);
ConnectionSets exceptional_omsr(const std::string& g, int m, bool literal = false);

// "family:key=value,..." with families orr (m = 1), orr_lift, trivial,
// z2_small, z2_large, gendihedral_orr, gendihedral_noorr, exceptional;
// e.g. "z2_small:n=3,m=12", "orr_lift:G=Z5,R=x,m=6". Multi-element sets separate words with ';' (R=x;xy).
struct ConstructionId {
  std::string family;
  std::map<std::string, std::string> params;

  static ConstructionId parse(const std::string& text);
  std::string to_string() const;
  bool has(const std::string& key) const { return params.count(key) > 0; }
  const std::string& get(const std::string& key) const;
  int get_int(const std::string& key) const;
};

class UnknownConstruction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Construction {
  ConstructionId id;
  ConnectionSets sets;
  int valency;  // as stated for the family
};

const std::vector<std::string>& construction_families();
// (R, a) from the R= and a= parameters, or from an ORR search over g.
std::pair<ElementSet, Element> orr_input(const ConstructionId& id, const GroupPtr& g);
Construction construct(const ConstructionId& id);
Construction construct(const std::string& id);

struct SelfCheck {
  bool oriented = false;
  bool loop_free = false;
  bool regular = false;
  bool valency_ok = false;
  bool ok() const { return oriented && loop_free && regular && valency_ok; }
};
SelfCheck self_check(const Construction& c);

}  // namespace omsr

#endif  // OMSR_CONSTRUCTIONS_HPP_
