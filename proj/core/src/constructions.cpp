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

#include "omsr/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "omsr/catalog.hpp"
#include "omsr/search.hpp"

namespace omsr {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

ElementSet single(const FiniteGroup& g, Element e) { return g.set_of({e}); }

ElementSet identity_set(const FiniteGroup& g) { return single(g, g.identity()); }

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

ElementSet embed(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out(g.order());
  for (Element e : s.elements()) out.insert(e);
  return out;
}

void check_orr_input(const FiniteGroup& g, const ElementSet& r, Element a) {
  require(r.universe() == g.order(), "ORR set over the wrong group");
  require(r.contains(a), "a must lie in R");
  require(!r.contains(g.identity()), "R must not contain the identity");
  require(!r.intersects(set_inverse(g, r)), "R must satisfy R & R^-1 = {}");
}

}  // namespace

ConnectionSets from_table(GroupPtr g, int m, const Table& table) {
  ConnectionSets t(g, m);
  for (auto& e : table) {
    int i = mod(e.i, m), j = mod(e.j, m);
    t.set(i, j, t.at(i, j) | g->parse_set(e.words));
  }
  return t;
}

Table apply_edits(Table table, const std::vector<TableEdit>& edits) {
  for (auto& ed : edits) {
    if (ed.from) {
      auto it = std::find(table.begin(), table.end(), *ed.from);
      if (it == table.end()) throw std::logic_error("apply_edits: entry not in table");
      if (ed.to)
        *it = *ed.to;
      else
        table.erase(it);
    } else if (ed.to) {
      table.push_back(*ed.to);
    }
  }
  return table;
}

std::string describe(const TableEdit& edit) {
  auto cell = [](const TableEntry& e) {
    return "T_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}={" +
           join(e.words, ",") + "}";
  };
  if (edit.from && edit.to) return cell(*edit.from) + " -> " + cell(*edit.to);
  if (edit.to) return "add " + cell(*edit.to);
  if (edit.from) return "drop " + cell(*edit.from);
  return "no-op";
}

// ORR lift

ConnectionSets orr_lift_o2sr(GroupPtr g, const ElementSet& r, Element a) {
  check_orr_input(*g, r, a);
  ConnectionSets t = bicay(g, r, set_inverse(*g, r), identity_set(*g), single(*g, g->inv(a)));
  t.notes.push_back("orr_lift m=2");
  return t;
}

ConnectionSets orr_lift_omsr(GroupPtr g, const ElementSet& r, Element a, int m) {
  require(m >= 3, "orr_lift_omsr needs m >= 3");
  check_orr_input(*g, r, a);
  const FiniteGroup& grp = *g;
  ConnectionSets t(g, m);
  for (int i = 0; i < m; ++i) {
    if (i != 1) {
      t.set_mod(i, i - 1, identity_set(grp));
      t.set(i, i, r);
    }
    if (i != 0 && i != m - 1) t.set_mod(i, i + 1, single(grp, grp.inv(a)));
  }
  t.set(0, 1, identity_set(grp));
  t.set(1, 0, single(grp, grp.inv(a)));
  t.set(1, 1, set_inverse(grp, r));
  t.set(m - 1, 0, single(grp, a));
  t.notes.push_back("orr_lift m=" + std::to_string(m));
  return t;
}

// Trivial group

Table trivial_literal_table(int m) {
  require(m >= 7 && m <= 11, "trivial table covers 7 <= m <= 11");
  Table t{{0, 3, {"1"}}, {1, 4, {"1"}}, {2, 1, {"1"}}, {m - 1, 2, {"1"}}};
  for (int j = 3; j <= m - 2; ++j) t.push_back({j, j + 2, {"1"}});
  for (int i = 0; i < m; ++i) t.push_back({i, mod(i + 1, m), {"1"}});
  return t;
}

std::vector<TableEdit> trivial_repairs(int m) {
  // T_{2,1} and T_{1,2} form a digon; swap the heads of 2->1 and (m-1)->0.
  return {{TableEntry{2, 1, {"1"}}, TableEntry{2, 0, {"1"}}},
          {TableEntry{m - 1, 0, {"1"}}, TableEntry{m - 1, 1, {"1"}}}};
}

std::vector<std::vector<int>> trivial_cycles(int m) {
  require(m >= 12, "trivial_cycles needs m >= 12");
  std::vector<int> a{0, 1, 2, 3, 4, 5, 6};
  std::vector<int> b{9};
  std::vector<int> c{0, 4, 2, 6, 7, 8, 3, 5, 7};
  if (m % 2 == 0) {
    for (int i = 10; i <= m - 2; i += 2) b.push_back(i);
    for (int i = m - 1; i >= 11; i -= 2) b.push_back(i);
    b.push_back(1);
    c.insert(c.end(), {m - 2, 8, m - 1});
    for (int i = m - 1; i >= 13; i -= 2) c.insert(c.end(), {i - 3, i - 2});
    c.push_back(9);
  } else {
    for (int i = 10; i <= m - 3; i += 2) b.push_back(i);
    b.insert(b.end(), {8, m - 1});
    for (int i = m - 2; i >= 11; i -= 2) b.push_back(i);
    b.push_back(1);
    c.insert(c.end(), {m - 1, m - 3});
    for (int i = m - 3; i >= 12; i -= 2) c.insert(c.end(), {i + 1, i - 2});
    c.insert(c.end(), {11, 9});
  }
  return {a, b, c};
}

namespace {

Table walks_table(const std::vector<std::vector<int>>& walks) {
  Table t;
  for (auto& w : walks)
    for (std::size_t k = 0; k < w.size(); ++k) t.push_back({w[k], w[(k + 1) % w.size()], {"1"}});
  return t;
}

GroupPtr z2_group(int n) {
  if (n == 0) return resolve_group("Z1");
  if (n == 1) return resolve_group("Z2");
  return resolve_group("Z2^" + std::to_string(n));
}

// Tables below are written in x, y, z, w; Z2^n labels them x1..xn.
std::string z2_word(const std::string& w, int n) {
  if (n == 1) return w;
  std::string out;
  for (char ch : w) {
    switch (ch) {
      case 'x': out += "x1"; break;
      case 'y': out += "x2"; break;
      case 'z': out += "x3"; break;
      case 'w': out += "x4"; break;
      default: out += ch;
    }
  }
  return out;
}

Table z2_translate(Table t, int n) {
  for (auto& e : t)
    for (auto& w : e.words) w = z2_word(w, n);
  return t;
}

}  // namespace

ConnectionSets trivial_omsr(int m) {
  require(m >= 7, "trivial_omsr needs m >= 7");
  GroupPtr g = z2_group(0);
  if (m <= 11) {
    auto edits = trivial_repairs(m);
    ConnectionSets t = from_table(g, m, apply_edits(trivial_literal_table(m), edits));
    for (auto& e : edits) t.notes.push_back("repair: " + describe(e));
    return t;
  }
  auto walks = trivial_cycles(m);
  ConnectionSets t = from_table(g, m, walks_table(walks));
  MCayleyDigraph d = build(t);
  if (!is_oriented(d.digraph()) || is_regular(d.digraph()) != 2 ||
      !is_connected_underlying(d.digraph()) || !arcs_partition_into(d.digraph(), walks))
    throw std::logic_error("trivial_omsr: index walk failed its structural check");
  return t;
}

// Z2^n, n <= 4

Table z2_small_literal_table(int n, int m) {
  require(n >= 1 && n <= 4, "z2_small covers 1 <= n <= 4");
  require(m >= 3 && m <= 11, "z2_small tables cover 3 <= m <= 11");
  Table t;
  auto add = [&](int i, int j, std::vector<std::string> w) { t.push_back({i, j, std::move(w)}); };
  if (n == 1) {
    if (m == 3) {
      for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {2, 0}}) add(i, j, {"1"});
      for (auto [i, j] : {std::pair{1, 0}, {1, 2}, {2, 1}}) add(i, j, {"x"});
    } else if (m == 4) {
      for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {3, 0}, {3, 1}}) add(i, j, {"1"});
      add(1, 0, {"x"});
      add(1, 2, {"x"});
      add(2, 3, {"1", "x"});
    } else if (m == 5) {
      for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {2, 0}, {2, 4}, {3, 1}, {3, 4}, {4, 3}, {4, 2}})
        add(i, j, {"1"});
      add(1, 0, {"x"});
      add(1, 2, {"x"});
    } else if (m == 6) {
      for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {2, 0}, {2, 5}, {3, 1}, {3, 4}, {4, 3}, {5, 4}})
        add(i, j, {"1"});
      for (auto [i, j] : {std::pair{1, 0}, {1, 2}, {4, 5}, {5, 2}}) add(i, j, {"x"});
    } else {
      for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {2, 0}, {2, 5}, {3, 1}, {3, 4}, {4, 3}, {5, 6}})
        add(i, j, {"1"});
      add(m - 1, 4, {"1"});
      for (auto [i, j] : {std::pair{1, 0}, {1, 2}, {4, m - 1}, {5, 2}, {m - 1, m - 2}})
        add(i, j, {"x"});
      for (int i = 6; i <= m - 2; ++i) {
        add(i, i + 1, {"1"});
        add(i, i - 1, {"x"});
      }
    }
  } else if (n == 2 || n == 3) {
    // Cases 3 and 4 share their shape; they differ in the y/z cells.
    const std::string t10 = n == 2 ? "y" : "z";
    const std::string t02 = n == 2 ? "xy" : "z";
    if (m == 3) {
      add(0, 1, {"1"});
      add(1, 2, {"1"});
      add(2, 1, {"x"});
      add(1, 0, {t10});
      add(2, 0, {"y"});
      add(0, 2, {t02});
    } else if (m == 4) {
      for (auto [i, j] : {std::pair{0, 1}, {1, 3}, {3, 2}}) add(i, j, {"1"});
      add(2, 3, {"x"});
      add(3, 1, {"x"});
      if (n == 2) add(1, 0, {"y"});
      add(2, 0, {"y"});
      add(0, 2, {t02});
    } else {
      for (auto [i, j] : {std::pair{0, 1}, {1, 3}, {3, 4}}) add(i, j, {"1"});
      add(m - 1, 2, {"1"});
      add(1, 0, {t10});
      add(2, 0, {"y"});
      add(0, 2, {t02});
      add(2, m - 1, {"x"});
      add(3, 1, {"x"});
      add(m - 1, m - 2, {"x"});
      for (int i = 4; i <= m - 2; ++i) {
        add(i, i + 1, {"1"});
        add(i, i - 1, {"x"});
      }
    }
  } else {
    add(0, 1, {"1", "y", "xy"});
    add(1, 2, {"1", "z", "w"});
    add(m - 1, 0, {"y", "w", "xw"});
    for (int i = 2; i <= m - 2; ++i) add(i, i + 1, {"x", "y", "w"});
  }
  return z2_translate(t, n);
}

std::vector<TableEdit> z2_small_repairs(int n, int m) {
  std::vector<TableEdit> e;
  auto cell = [n](int i, int j, const char* w) { return TableEntry{i, j, {z2_word(w, n)}}; };
  if (n == 1) {
    // m = 3 has no oriented O3SR at all, so the literal table is kept.
    if (m == 5) {
      e.push_back({cell(2, 4, "1"), cell(2, 4, "x")});
      e.push_back({cell(3, 4, "1"), cell(3, 4, "x")});
    } else if (m >= 6 && m <= 11) {
      e.push_back({cell(0, 3, "1"), cell(0, 3, "x")});
      e.push_back({cell(3, 4, "1"), cell(3, 4, "x")});
    }
  } else if (n == 3 && m == 4) {
    e.push_back({std::nullopt, cell(1, 0, "z")});
  }
  return e;
}

ConnectionSets z2_small_omsr(int n, int m) {
  require(n >= 1 && n <= 4, "z2_small covers 1 <= n <= 4");
  require(m >= 3, "z2_small needs m >= 3");
  GroupPtr g = z2_group(n);
  if (m <= 11) {
    auto edits = z2_small_repairs(n, m);
    ConnectionSets t = from_table(g, m, apply_edits(z2_small_literal_table(n, m), edits));
    for (auto& e : edits) t.notes.push_back("repair: " + describe(e));
    if (n == 1 && m == 3) t.notes.push_back("literal table kept: contains digons");
    return t;
  }
  ConnectionSets t = from_table(g, m, walks_table(trivial_cycles(m)));
  const char* labels[] = {"x", "y", "z", "w"};
  const std::pair<int, int> cells[] = {{6, 0}, {1, 2}, {8, 3}, {4, 5}};
  for (int k = 0; k < n; ++k)
    t.set(cells[k].first, cells[k].second, g->parse_set({z2_word(labels[k], n)}));
  return t;
}

// Z2^n, n >= 5

Z2LargeSets z2_large_sets(int n) {
  require(n >= 5, "z2_large needs n >= 5");
  GroupPtr g = z2_group(n);
  std::vector<Element> x(n + 1);
  for (int i = 1; i <= n; ++i) x[i] = g->generator("x" + std::to_string(i));
  Element all = g->identity();
  for (int i = 1; i <= n; ++i) all = g->mul(all, x[i]);
  auto prod = [&](std::initializer_list<int> idx) {
    Element e = g->identity();
    for (int i : idx) e = g->mul(e, x[i]);
    return e;
  };
  ElementSet s(g->order()), t(g->order());
  s.insert(g->identity());
  for (int i = 1; i <= n; ++i) s.insert(x[i]);
  t.insert(prod({1, 2, n - 2, n - 1}));
  t.insert(prod({1, 2, n - 1, n}));
  for (int i = 1; i < n; ++i) t.insert(prod({i, i + 1}));
  return {g, s, left_translate(*g, all, s), t};
}

ConnectionSets z2_large_o2sr(int n) {
  auto z = z2_large_sets(n);
  ElementSet empty(z.group->order());
  return bicay(z.group, empty, empty, z.s, z.t);
}

ConnectionSets z2_large_omsr(int n, int m) {
  require(m >= 3, "z2_large_omsr needs m >= 3");
  auto z = z2_large_sets(n);
  ConnectionSets t(z.group, m);
  for (int i = 0; i < m; ++i) {
    t.set_mod(i, i + 1, z.s);
    if (i != 1) t.set_mod(i, i - 1, z.r);
  }
  t.set(1, 0, z.t);
  return t;
}

// Generalized dihedral groups

namespace {

GroupPtr gd_group(const std::string& h) { return resolve_group("GD(" + lookup(h).name + ")"); }

void check_gd_orr_input(const std::string& h, const ElementSet& r_h, Element a) {
  const CatalogEntry& e = lookup(h);
  require(e.group->is_abelian() && e.group->exponent() > 2,
          "GD construction needs H abelian of exponent > 2");
  check_orr_input(*e.group, r_h, a);
}

}  // namespace

ConnectionSets gendihedral_orr_o2sr(const std::string& h, const ElementSet& r_h, Element a,
                                    bool literal) {
  check_gd_orr_input(h, r_h, a);
  GroupPtr g = gd_group(h);
  ElementSet r = embed(*g, r_h);
  ElementSet s = g->set_of({g->identity(), a});
  ElementSet t = g->set_of({a, g->generator("b")});
  ConnectionSets c = bicay(g, r, literal ? set_inverse(*g, r) : r, s, t);
  c.notes.push_back("gendihedral_orr m=2");
  if (!literal) c.notes.push_back("T11 = R in place of the literal R^-1");
  return c;
}

ConnectionSets gendihedral_orr_omsr(const std::string& h, const ElementSet& r_h, Element a,
                                    int m) {
  require(m >= 3, "gendihedral_orr_omsr needs m >= 3");
  check_gd_orr_input(h, r_h, a);
  GroupPtr g = gd_group(h);
  const FiniteGroup& grp = *g;
  ElementSet r = embed(grp, r_h);
  ElementSet rinv = set_inverse(grp, r);
  ConnectionSets t(g, m);
  for (int i = 0; i < m; ++i) {
    t.set(i, i, (i == 0 || i == 1 || i == m - 1) ? r : rinv);
    if (i != 1) t.set_mod(i, i - 1, identity_set(grp));
    if (i != 0 && i != m - 2 && i != m - 1) t.set_mod(i, i + 1, single(grp, a));
  }
  t.set(1, 0, single(grp, a));
  t.set(0, 1, identity_set(grp));
  t.set(m - 2, m - 1, single(grp, grp.generator("b")));
  t.set(m - 1, 0, single(grp, grp.inv(a)));
  t.notes.push_back("gendihedral_orr m=" + std::to_string(m));
  return t;
}

const std::vector<std::string>& gendihedral_noorr_bases() {
  static const std::vector<std::string> v{"Z4xZ2",   "Z3^2",    "Z4xZ2^2",
                                          "Z3xZ2^3", "Z4xZ2^3", "Z4xZ2^4"};
  return v;
}

RLSets gendihedral_noorr_sets(const std::string& h, bool literal) {
  const std::string name = lookup(h).name;
  if (name == "Z4xZ2" || name == "Z3^2")
    return {literal ? std::vector<std::string>{"x", "xb"} : std::vector<std::string>{"x", "xy"},
            {"x", "x^-1y"}};
  if (name == "Z4xZ2^2") return {{"x", "xy"}, {"x", "x^-1yz"}};
  if (name == "Z3xZ2^3" || name == "Z4xZ2^3")
    return {{"x", "xy", "xz", "xw"}, {"x", "xz", "xzw", "x^-1yzw"}};
  if (name == "Z4xZ2^4")
    return {{"x", "xy", "xz", "xw", "xu"}, {"x", "xz", "x^-1zw", "xyzw", "x^-1zwu"}};
  throw std::invalid_argument("gendihedral_noorr: H must be one of the six bases without an ORR");
}

namespace {

// Shared shape of the no-ORR template: T00=R, T10={x^-1}, T01=s01, T_ii=L,
// T_{i,i+1}={1} (i != 0), T_{i,i-1}={x} (i != 1).
ConnectionSets rl_template(GroupPtr g, const RLSets& sets, const ElementSet& s01, int m) {
  require(m >= 2, "template needs m >= 2");
  const FiniteGroup& grp = *g;
  ElementSet r = grp.parse_set(sets.r), l = grp.parse_set(sets.l);
  Element x = grp.generator("x");
  if (m == 2) return bicay(g, r, l, s01, single(grp, grp.inv(x)));
  ConnectionSets t(g, m);
  for (int i = 0; i < m; ++i) {
    if (i != 0) {
      t.set(i, i, l);
      t.set_mod(i, i + 1, identity_set(grp));
    }
    if (i != 1) t.set_mod(i, i - 1, single(grp, x));
  }
  t.set(0, 0, r);
  t.set(1, 0, single(grp, grp.inv(x)));
  t.set(0, 1, s01);
  return t;
}

}  // namespace

ConnectionSets gendihedral_noorr_omsr(const std::string& h, int m, bool literal) {
  GroupPtr g = gd_group(h);
  RLSets sets = gendihedral_noorr_sets(h, literal);
  ConnectionSets t = rl_template(g, sets, single(*g, g->generator("b")), m);
  if (!literal && (lookup(h).name == "Z4xZ2" || lookup(h).name == "Z3^2"))
    t.notes.push_back("R = {x, xy} in place of the literal {x, xb}");
  return t;
}

RLSets exceptional_sets(const std::string& name, bool literal) {
  const CatalogEntry& e = lookup(name);
  require(e.exceptional, name + " is not one of the exceptional groups");
  // In H1, H2, H3 and D4oD4 the literal sets contain involutions (xy, for
  // instance), so the template would have digons; these substitutes were
  // found by engine search and keep x in R and L.
  if (!literal) {
    if (e.name == "H1") return {{"x", "y"}, {"x", "y"}};
    if (e.name == "H2") return {{"x", "y", "xz"}, {"x", "y", "xz"}};
    if (e.name == "H3") return {{"x", "y", "z"}, {"x", "y", "z^-1"}};
    if (e.name == "D4oD4") return {{"x", "z", "xw", "xzw"}, {"x", "z", "xw", "xyz^-1"}};
  }
  // |R| is the number of labelled generators: 2 for Z4xZ2, Q8, Z3^2, H1;
  // 3 for Z4xZ2^2, H2, H3; 4 for Z3xZ2^3, Z4xZ2^3, D4oD4; 5 for Z4xZ2^4.
  int size = static_cast<int>(e.group->generators().size());
  const std::vector<std::string> letters{"y", "z", "w", "u"};
  RLSets s;
  s.r.push_back("x");
  s.l.push_back("x");
  std::string tail;
  for (int k = 0; k + 1 < size; ++k) {
    s.r.push_back("x" + letters[k]);
    tail += letters[k];
    s.l.push_back("x^-1" + tail);
  }
  return s;
}

bool exceptional_sets_substituted(const std::string& name) {
  const std::string& n = lookup(name).name;
  return n == "H1" || n == "H2" || n == "H3" || n == "D4oD4";
}

ConnectionSets exceptional_omsr(const std::string& name, int m, bool literal) {
  GroupPtr g = resolve_group(name);
  ConnectionSets t = rl_template(g, exceptional_sets(name, literal), identity_set(*g), m);
  if (!literal && exceptional_sets_substituted(name)) {
    RLSets p = exceptional_sets(name, true);
    RLSets u = exceptional_sets(name, false);
    t.notes.push_back("R = {" + join(u.r, ", ") + "}, L = {" + join(u.l, ", ") +
                      "} in place of the literal R = {" + join(p.r, ", ") + "}, L = {" +
                      join(p.l, ", ") + "}");
  }
  return t;
}

// Construction ids

const std::string& ConstructionId::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw UnknownConstruction("construction " + family + " needs " + key);
  return it->second;
}

int ConstructionId::get_int(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t pos = 0;
    int out = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw UnknownConstruction("parameter " + key + "=" + v + " is not an integer");
  }
}

ConstructionId ConstructionId::parse(const std::string& text) {
  ConstructionId id;
  auto colon = text.find(':');
  id.family = text.substr(0, colon);
  if (id.family.empty()) throw UnknownConstruction("empty construction family");
  if (colon == std::string::npos) return id;
  std::stringstream ss(text.substr(colon + 1));
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    if (kv.empty()) continue;
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UnknownConstruction("malformed parameter '" + kv + "'");
    id.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return id;
}

std::string ConstructionId::to_string() const {
  std::string out = family;
  char sep = ':';
  for (auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

const std::vector<std::string>& construction_families() {
  static const std::vector<std::string> f{
      "orr",      "orr_lift",        "trivial",           "z2_small",
      "z2_large", "gendihedral_orr", "gendihedral_noorr", "exceptional"};
  return f;
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (std::getline(ss, w, ';'))
    if (!w.empty()) out.push_back(w);
  return out;
}

}  // namespace

// R and a from the id, or from an ORR search over `group` when R is absent.
std::pair<ElementSet, Element> orr_input(const ConstructionId& id, const GroupPtr& group) {
  if (id.has("R")) {
    auto words = split_words(id.get("R"));
    require(!words.empty(), "R must be non-empty");
    ElementSet r = group->parse_set(words);
    Element a = id.has("a") ? group->parse(id.get("a")) : group->parse(words.front());
    return {r, a};
  }
  Certificate c = find_orr(group);
  if (c.kind != CertificateKind::kOrrWitness)
    throw std::invalid_argument(group->name() + " has no ORR");
  ElementSet r = c.connection_sets->at(0, 0);
  if (id.has("a")) return {r, group->parse(id.get("a"))};
  return {r, r.empty() ? group->identity() : r.elements().front()};
}

Construction construct(const ConstructionId& id) {
  const std::string& f = id.family;
  if (f == "orr") {
    GroupPtr g = resolve_group(id.get("G"));
    ElementSet r = orr_input(id, g).first;
    ConnectionSets t(g, 1);
    t.set(0, 0, r);
    return {id, std::move(t), r.size()};
  }
  if (f == "orr_lift") {
    GroupPtr g = resolve_group(id.get("G"));
    int m = id.get_int("m");
    auto [r, a] = orr_input(id, g);
    auto sets = m == 2 ? orr_lift_o2sr(g, r, a) : orr_lift_omsr(g, r, a, m);
    return {id, std::move(sets), r.size() + (m == 2 ? 1 : 2)};
  }
  if (f == "trivial") return {id, trivial_omsr(id.get_int("m")), 2};
  if (f == "z2_small") {
    int n = id.get_int("n"), m = id.get_int("m");
    return {id, z2_small_omsr(n, m), (n == 4 && m <= 11) ? 3 : 2};
  }
  if (f == "z2_large") {
    int n = id.get_int("n"), m = id.get_int("m");
    if (m == 2) return {id, z2_large_o2sr(n), n + 1};
    return {id, z2_large_omsr(n, m), 2 * n + 2};
  }
  if (f == "gendihedral_orr") {
    const std::string h = id.get("H");
    int m = id.get_int("m");
    auto [r, a] = orr_input(id, resolve_group(h));
    bool literal = id.has("literal") && id.get("literal") != "0";
    auto sets = m == 2 ? gendihedral_orr_o2sr(h, r, a, literal) : gendihedral_orr_omsr(h, r, a, m);
    return {id, std::move(sets), r.size() + 2};
  }
  if (f == "gendihedral_noorr") {
    const std::string h = id.get("H");
    int m = id.get_int("m");
    bool literal = id.has("literal") && id.get("literal") != "0";
    auto sets = gendihedral_noorr_omsr(h, m, literal);
    int r = static_cast<int>(gendihedral_noorr_sets(h).r.size());
    return {id, std::move(sets), r + (m == 2 ? 1 : 2)};
  }
  if (f == "exceptional") {
    const std::string g = id.get("G");
    int m = id.get_int("m");
    bool literal = id.has("literal") && id.get("literal") != "0";
    int r = static_cast<int>(exceptional_sets(g, literal).r.size());
    return {id, exceptional_omsr(g, m, literal), r + (m == 2 ? 1 : 2)};
  }
  throw UnknownConstruction("unknown construction family '" + f + "' (known: " +
                            join(construction_families(), ", ") + ")");
}

Construction construct(const std::string& id) { return construct(ConstructionId::parse(id)); }

SelfCheck self_check(const Construction& c) {
  SelfCheck s;
  ValidationReport v = validate(c.sets);
  s.oriented = v.oriented;
  s.loop_free = v.loop_free;
  if (!s.loop_free) return s;
  auto val = is_regular(build(c.sets).digraph());
  s.regular = val.has_value();
  s.valency_ok = val && *val == c.valency;
  return s;
}

}  // namespace omsr
