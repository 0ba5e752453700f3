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

#include "omsr/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "omsr/catalog.hpp"

namespace omsr {

using nlohmann::json;

json to_json(const ConnectionSets& t) {
  const FiniteGroup& g = t.group();
  json cells = json::array();
  for (int i = 0; i < t.m(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.m(); ++j) {
      json cell = json::array();
      for (Element e : t.at(i, j).elements()) cell.push_back(g.display_name(e));
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }
  json out{{"group", g.name()}, {"m", t.m()}, {"cells", std::move(cells)}};
  if (!t.notes.empty()) out["notes"] = t.notes;
  return out;
}

ConnectionSets connection_sets_from_json(const json& j) {
  GroupPtr g = resolve_group(j.at("group").get<std::string>());
  int m = j.at("m").get<int>();
  const json& cells = j.at("cells");
  if (!cells.is_array() || static_cast<int>(cells.size()) != m)
    throw std::invalid_argument("cells must be an m x m array");
  ConnectionSets t(g, m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cells[i].size()) != m)
      throw std::invalid_argument("cells must be an m x m array");
    for (int j2 = 0; j2 < m; ++j2)
      t.set(i, j2, g->parse_set(cells[i][j2].get<std::vector<std::string>>()));
  }
  if (j.contains("notes")) t.notes = j.at("notes").get<std::vector<std::string>>();
  return t;
}

json to_json(const Digraph& g) {
  json arcs = json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  return {{"n", g.n()}, {"arcs", std::move(arcs)}};
}

Digraph digraph_from_json(const json& j) {
  std::vector<Arc> arcs;
  for (auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return Digraph(j.at("n").get<int>(), std::move(arcs));
}

json to_json(const OmsrVerdict& v) {
  json out{{"is_omsr", v.is_omsr},
           {"oriented", v.oriented},
           {"regular", v.regular},
           {"aut_order", v.aut_order.str()},
           {"aut_order_is_lower_bound", v.aut_order_is_bound},
           {"orbit_count", v.orbit_count},
           {"stabilizer_order", v.stabilizer_order.str()}};
  out["valency"] = v.valency ? json(*v.valency) : json(nullptr);
  out["witness"] = v.witness ? json(v.witness->images()) : json(nullptr);
  return out;
}

json to_json(const Certificate& c, bool with_wall_time) {
  json out{{"kind", to_string(c.kind)},
           {"group", c.group},
           {"m", c.m},
           {"aut_order", c.aut_order.str()},
           {"candidates_examined", c.candidates_examined},
           {"reductions_used", c.reductions_used},
           {"space", c.space},
           {"engine_version", c.engine_version}};
  out["connection_sets"] = c.connection_sets ? to_json(*c.connection_sets) : json(nullptr);
  if (with_wall_time) out["wall_time"] = c.wall_time;
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
  c.group = j.at("group").get<std::string>();
  c.m = j.at("m").get<int>();
  c.aut_order = BigInt(j.at("aut_order").get<std::string>());
  c.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
  c.reductions_used = j.at("reductions_used").get<std::vector<std::string>>();
  c.space = j.at("space").get<std::string>();
  c.engine_version = j.at("engine_version").get<std::string>();
  if (!j.at("connection_sets").is_null())
    c.connection_sets = connection_sets_from_json(j.at("connection_sets"));
  if (j.contains("wall_time")) c.wall_time = j.at("wall_time").get<double>();
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string certificate_path(const std::string& dir, const Certificate& c) {
  std::ostringstream key;
  key << c.group << '\n' << c.m << '\n' << c.space << '\n';
  for (auto& r : c.reductions_used) key << r << ',';
  key << '\n' << c.engine_version;
  std::ostringstream name;
  std::string group = c.group;
  for (char& ch : group)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  name << to_string(c.kind) << '-' << group << "-m" << c.m << '-' << std::hex
       << std::setw(16) << std::setfill('0') << fnv1a(key.str()) << ".json";
  return (std::filesystem::path(dir) / name.str()).string();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << contents;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace omsr
