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

#include "omsr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

#include "omsr/coset_enumeration.hpp"

namespace omsr {

namespace {

struct Factor {
  int n;
  int k;
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>>& registry() {
  static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> r;
  return r;
}

std::string normalize(std::string_view raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    unsigned char c = raw[i];
    if (std::isspace(c)) continue;
    if (raw.substr(i, 2) == "\xC3\x97") {  // multiplication sign
      s += 'x';
      ++i;
      continue;
    }
    if (raw.substr(i, 3) == "\xE2\x88\x98") {  // ring operator
      s += 'o';
      i += 2;
      continue;
    }
    s += static_cast<char>(c);
  }
  return s;
}

bool parse_int(std::string_view s, int* out) {
  if (s.empty() || s.size() > 6) return false;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  *out = v;
  return true;
}

// "Z4xZ2^2" -> {(4,1), (2,2)}; empty on failure.
std::vector<Factor> parse_abelian(std::string_view s) {
  std::vector<Factor> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('x', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view f = s.substr(start, end - start);
    if (f.size() < 2 || f[0] != 'Z') return {};
    f.remove_prefix(1);
    Factor fac{0, 1};
    auto caret = f.find('^');
    if (!parse_int(f.substr(0, caret), &fac.n) || fac.n < 1) return {};
    if (caret != std::string_view::npos && (!parse_int(f.substr(caret + 1), &fac.k) || fac.k < 0))
      return {};
    out.push_back(fac);
    start = end + 1;
  }
  return out;
}

std::string factor_name(Factor f) {
  if (f.k == 0 || f.n == 1) return "Z1";
  if (f.n == 2 && f.k == 1) return "Z2";
  return "Z" + std::to_string(f.n) + (f.k > 1 ? "^" + std::to_string(f.k) : "");
}

std::unique_ptr<CatalogEntry> make_abelian(const std::vector<Factor>& factors) {
  auto e = std::make_unique<CatalogEntry>();
  std::vector<int> cyc;
  std::vector<std::string> names;
  for (auto f : factors) {
    if (f.k == 0 || f.n == 1) continue;
    names.push_back(factor_name(f));
    for (int i = 0; i < f.k; ++i) cyc.push_back(f.n);
  }
  if (cyc.empty()) {
    e->name = "Z1";
    e->kind = GroupKind::kCyclic;
    e->group = std::make_shared<FiniteGroup>(cyclic(1));
    e->elem_abelian_rank = 0;
    return e;
  }
  std::string name;
  for (auto& n : names) name += (name.empty() ? "" : "x") + n;
  e->name = name;
  bool all2 = std::all_of(cyc.begin(), cyc.end(), [](int n) { return n == 2; });
  if (all2) e->elem_abelian_rank = static_cast<int>(cyc.size());
  if (cyc.size() == 1) {
    e->kind = GroupKind::kCyclic;
    e->group = std::make_shared<FiniteGroup>(cyclic(cyc[0]).renamed(name));
    return e;
  }
  if (names.size() == 1 && cyc[0] == 2) {
    e->kind = GroupKind::kElemAbelian2;
    e->group = std::make_shared<FiniteGroup>(
        elementary_abelian_2(static_cast<int>(cyc.size())).renamed(name));
    return e;
  }
  static const char* pool[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  if (cyc.size() > std::size(pool)) throw UnknownGroup("too many factors in " + name);
  FiniteGroup g = cyclic(cyc[0]);
  for (std::size_t i = 1; i < cyc.size(); ++i) {
    std::vector<std::string> labels(pool, pool + i);
    g = direct_product(g.with_generator_labels(labels), cyclic(cyc[i]));
  }
  g = g.with_generator_labels(std::vector<std::string>(pool, pool + cyc.size()));
  e->kind = all2 ? GroupKind::kElemAbelian2 : GroupKind::kAbelianProduct;
  e->group = std::make_shared<FiniteGroup>(g.renamed(name));
  return e;
}

const std::vector<std::string>& exceptional_list() {
  static const std::vector<std::string> names = {"Q8",      "Z4xZ2",   "Z4xZ2^2", "Z4xZ2^3",
                                                 "Z4xZ2^4", "Z3^2",    "Z3xZ2^3", "H1",
                                                 "H2",      "H3",      "D4oD4"};
  return names;
}

std::unique_ptr<CatalogEntry> build_named(const std::string& s) {
  if (s == "Q8") {
    auto e = std::make_unique<CatalogEntry>();
    e->name = s;
    e->kind = GroupKind::kQuaternion;
    e->group = std::make_shared<FiniteGroup>(quaternion());
    return e;
  }
  if (s == "H1" || s == "H2" || s == "H3") {
    auto e = std::make_unique<CatalogEntry>();
    e->name = s;
    e->kind = GroupKind::kPresentation;
    int bound = s == "H3" ? 32 : 16;
    e->group = std::make_shared<FiniteGroup>(
        coset_enumerate(parse_presentation(exceptional_presentation(s)), bound, s));
    return e;
  }
  if (s == "D4oD4") {
    auto e = std::make_unique<CatalogEntry>();
    e->name = s;
    e->kind = GroupKind::kCentralProduct;
    e->group = std::make_shared<FiniteGroup>(central_product_d4_d4());
    return e;
  }
  if (s.size() > 4 && s.rfind("GD(", 0) == 0 && s.back() == ')') {
    const CatalogEntry& base = lookup(s.substr(3, s.size() - 4));
    if (!base.group->is_abelian()) throw UnknownGroup("GD() needs an abelian group: " + s);
    auto e = std::make_unique<CatalogEntry>();
    e->name = "GD(" + base.name + ")";
    e->kind = GroupKind::kGenDihedral;
    e->base = base.name;
    e->group = std::make_shared<FiniteGroup>(generalized_dihedral(*base.group).renamed(e->name));
    if (base.elem_abelian_rank >= 0) e->elem_abelian_rank = base.elem_abelian_rank + 1;
    return e;
  }
  auto factors = parse_abelian(s);
  if (factors.empty()) return nullptr;
  return make_abelian(factors);
}

}  // namespace

std::string exceptional_presentation(std::string_view name) {
  if (name == "H1") return "<x, y | x^4 = y^4 = (xy)^2 = (xy^-1)^2 = 1>";
  if (name == "H2")
    return "<x, y, z | x^4 = y^4 = z^4 = (yx)^2 = (yx^-1)^2 = (yz)^2 = (yz^-1)^2 = 1,"
           " x^2 = y^2 = z^2, x^z = x^-1>";
  if (name == "H3")
    return "<x, y, z | x^4 = y^4 = z^4 = (xy)^2 = (xy^-1)^2 = (xz)^2 = (xz^-1)^2 ="
           " (yz)^2 = (yz^-1)^2 = x^2y^2z^2 = 1>";
  throw UnknownGroup("no stored presentation for " + std::string(name));
}

const CatalogEntry& lookup(std::string_view raw) {
  std::string s = normalize(raw);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(s);
    if (it != registry().end()) return *it->second;
  }
  auto e = build_named(s);
  if (!e) throw UnknownGroup("unknown group \"" + std::string(raw) + "\"");
  const auto& ex = exceptional_list();
  e->exceptional = std::find(ex.begin(), ex.end(), e->name) != ex.end();
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto canon = reg.find(e->name);
  if (canon == reg.end()) {
    std::string key = e->name;
    canon = reg.emplace(key, std::move(e)).first;
  }
  if (s != canon->first) {
    // Alias the spelling used by the caller to the canonical entry.
    reg.emplace(s, std::make_unique<CatalogEntry>(*canon->second));
    return *reg.find(s)->second;
  }
  return *canon->second;
}

GroupPtr resolve_group(std::string_view name) { return lookup(name).group; }

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 16; ++n) names.push_back("Z" + std::to_string(n));
  for (int k = 2; k <= 6; ++k) names.push_back("Z2^" + std::to_string(k));
  for (auto& e : exceptional_list()) names.push_back(e);
  for (const char* h : {"Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z4xZ2", "Z3^2", "Z4xZ2^2",
                        "Z3xZ2^3", "Z4xZ2^3", "Z4xZ2^4"})
    names.push_back(std::string("GD(") + h + ")");
  return names;
}

const std::vector<std::string>& exceptional_group_names() { return exceptional_list(); }

std::vector<std::string> register_catalog(const nlohmann::json& doc) {
  std::vector<std::string> added;
  if (doc.is_array()) {
    for (auto& d : doc) {
      auto more = register_catalog(d);
      added.insert(added.end(), more.begin(), more.end());
    }
    return added;
  }
  const std::string name = doc.at("name").get<std::string>();
  const std::string kind = doc.at("kind").get<std::string>();
  const nlohmann::json params = doc.value("parameters", nlohmann::json::object());
  auto e = std::make_unique<CatalogEntry>();
  if (kind == "cyclic") {
    e = make_abelian({{params.at("n").get<int>(), 1}});
  } else if (kind == "elem_abelian_2") {
    e = make_abelian({{2, params.at("n").get<int>()}});
  } else if (kind == "direct_product") {
    std::string s;
    for (auto& f : params.at("factors")) s += (s.empty() ? "" : "x") + f.get<std::string>();
    auto factors = parse_abelian(normalize(s));
    if (factors.empty()) throw UnknownGroup("direct_product factors must be cyclic: " + s);
    e = make_abelian(factors);
  } else if (kind == "gen_dihedral") {
    e = build_named("GD(" + params.at("base").get<std::string>() + ")");
  } else if (kind == "central_product") {
    e = build_named("D4oD4");
  } else if (kind == "presentation") {
    Presentation p;
    if (params.contains("presentation")) {
      p = parse_presentation(params.at("presentation").get<std::string>());
    } else {
      p.generators = params.at("generators").get<std::vector<std::string>>();
      for (auto& r : doc.at("relators")) {
        Presentation q = parse_presentation("<" + [&] {
          std::string g;
          for (auto& x : p.generators) g += (g.empty() ? "" : ",") + x;
          return g;
        }() + " | " + r.get<std::string>() + ">");
        p.relators.insert(p.relators.end(), q.relators.begin(), q.relators.end());
      }
    }
    e->kind = GroupKind::kPresentation;
    e->group = std::make_shared<FiniteGroup>(
        coset_enumerate(p, params.at("order_bound").get<int>(), name));
  } else {
    throw UnknownGroup("unknown catalog kind \"" + kind + "\"");
  }
  if (!e) throw UnknownGroup("cannot build catalog entry " + name);
  e->name = name;
  e->group = std::make_shared<FiniteGroup>(e->group->renamed(name));
  const auto& ex = exceptional_list();
  e->exceptional = std::find(ex.begin(), ex.end(), name) != ex.end();
  std::lock_guard<std::mutex> lock(registry_mutex());
  if (!registry().emplace(normalize(name), std::move(e)).second)
    throw UnknownGroup("catalog name already in use: " + name);
  added.push_back(name);
  return added;
}

std::vector<std::string> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  return register_catalog(nlohmann::json::parse(in));
}

}  // namespace omsr
