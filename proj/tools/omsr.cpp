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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "omsr/catalog.hpp"
#include "omsr/claims.hpp"
#include "omsr/constructions.hpp"
#include "omsr/dispatch.hpp"
#include "omsr/search.hpp"
#include "omsr/serialization.hpp"
#include "omsr/verdict.hpp"

namespace {

using nlohmann::json;
using namespace omsr;

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct Source {
  std::string construction;
  std::string input;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* c = cmd->add_option("-c,--construction", src.construction,
                            "construction id, e.g. z2_small:n=3,m=12");
  auto* i = cmd->add_option("-i,--input", src.input, "connection sets JSON file");
  c->excludes(i);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct Loaded {
  ConnectionSets sets;
  std::optional<Construction> construction;
};

Loaded load(const Source& src) {
  if (!src.construction.empty()) {
    Construction c = construct(src.construction);
    return {c.sets, c};
  }
  if (!src.input.empty())
    return {connection_sets_from_json(json::parse(read_file(src.input))), std::nullopt};
  throw std::invalid_argument("one of --construction or --input is required");
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

int run_build(const Source& src, const std::string& out, bool as_json) {
  Loaded l = load(src);
  json j = to_json(l.sets);
  int code = kOk;
  if (l.construction) {
    SelfCheck s = self_check(*l.construction);
    j["construction"] = l.construction->id.to_string();
    j["valency"] = l.construction->valency;
    j["self_check"] = {{"oriented", s.oriented},
                       {"loop_free", s.loop_free},
                       {"regular", s.regular},
                       {"valency_ok", s.valency_ok}};
    if (!s.ok()) code = kFalse;
  }
  if (as_json || !out.empty()) {
    emit(out, j.dump(2) + "\n");
  } else {
    const FiniteGroup& g = l.sets.group();
    std::cout << g.name() << ", m = " << l.sets.m() << "\n";
    for (int i = 0; i < l.sets.m(); ++i)
      for (int k = 0; k < l.sets.m(); ++k)
        if (!l.sets.at(i, k).empty())
          std::cout << "  T" << i << "," << k << " = " << g.format_set(l.sets.at(i, k)) << "\n";
    for (auto& n : l.sets.notes) std::cout << "  note: " << n << "\n";
    if (l.construction)
      std::cout << "self-check: " << (code == kOk ? "ok" : "FAILED") << "\n";
  }
  return code;
}

int run_verify(const Source& src, bool as_json) {
  Loaded l = load(src);
  OmsrVerdict v = check_omsr(l.sets);
  if (as_json) {
    json j{{"group", l.sets.group().name()}, {"m", l.sets.m()}, {"verdict", to_json(v)}};
    if (l.construction) j["construction"] = l.construction->id.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << l.sets.group().name() << ", m = " << l.sets.m() << ": "
              << (v.is_omsr ? "OmSR" : "not an OmSR") << "\n"
              << "  oriented " << (v.oriented ? "yes" : "no") << ", regular "
              << (v.regular ? "yes" : "no");
    if (v.valency) std::cout << " (valency " << *v.valency << ")";
    std::cout << "\n  |Aut| = " << v.aut_order << ", |G| = " << l.sets.group().order()
              << ", stabilizer of 1_0 = " << v.stabilizer_order << "\n";
  }
  return v.is_omsr ? kOk : kFalse;
}

struct SearchArgs {
  std::string group;
  int m = 1;
  int min_valency = -1;
  int max_valency = -1;
  int workers = 1;
  std::uint64_t max_candidates = 0;
  double max_seconds = 0;
  bool no_reductions = false;
  std::string out;
};

int run_search(const SearchArgs& a, bool as_json) {
  SearchSpace space;
  space.group = resolve_group(a.group);
  space.m = a.m;
  if (a.min_valency >= 0) space.min_valency = a.min_valency;
  if (a.max_valency >= 0) space.max_valency = a.max_valency;
  if (a.no_reductions) space.reductions = {false, false};
  SearchLimits limits{a.max_candidates, a.max_seconds, a.workers};
  Certificate c;
  try {
    c = prove_nonexistence(space, limits);
  } catch (const BudgetExceeded& e) {
    std::cerr << "omsr: " << e.what() << "\n";
    return kBudget;
  }
  std::string path;
  if (!a.out.empty()) {
    path = certificate_path(a.out, c);
    write_file_atomic(path, to_json(c).dump(2) + "\n");
  }
  if (as_json) {
    json j = to_json(c, true);
    if (!path.empty()) j["path"] = path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(c.kind) << ": " << c.space << "\n"
              << "  candidates examined " << c.candidates_examined << "\n";
    if (c.connection_sets) {
      const FiniteGroup& g = c.connection_sets->group();
      for (int i = 0; i < c.m; ++i)
        for (int k = 0; k < c.m; ++k)
          std::cout << "  T" << i << "," << k << " = "
                    << g.format_set(c.connection_sets->at(i, k)) << "\n";
    }
    if (!path.empty()) std::cout << "  certificate " << path << "\n";
  }
  return kOk;
}

int run_claims(const std::string& id_text, bool as_json) {
  ConstructionId id = ConstructionId::parse(id_text);
  ClaimReport r;
  if (id.family == "orr_lift") {
    GroupPtr g = resolve_group(id.get("G"));
    auto [set, a] = orr_input(id, g);
    r = claim_orr_lift(g, set, a, id.get_int("m"));
  } else if (id.family == "gendihedral_orr") {
    const std::string h = id.get("H");
    auto [set, a] = orr_input(id, resolve_group(h));
    r = claim_gendihedral(h, set, a, id.get_int("m"));
  } else {
    throw std::invalid_argument("claims apply to orr_lift and gendihedral_orr constructions");
  }
  if (as_json) {
    std::cout << json{{"claim", r.claim},       {"group", r.group},
                      {"m", r.m},               {"k", r.k},
                      {"branch", r.branch},     {"expected", r.expected},
                      {"measured", r.measured}, {"matches", r.matches()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << r.summary() << "\n";
  }
  return r.matches() ? kOk : kFalse;
}

int run_theorem(const std::string& group, int m, bool as_json) {
  DispatchResult r = theorem_dispatch(group, m);
  if (as_json) {
    json j{{"group", group}, {"m", m}, {"verdict", to_string(r.verdict)}, {"branch", r.branch},
           {"reason", r.reason}};
    j["construction"] = r.construction ? json(r.construction->to_string()) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(r.verdict);
    if (r.branch) std::cout << " (branch " << r.branch << ")";
    std::cout << ": " << r.reason << "\n";
    if (r.construction) std::cout << "  construction " << r.construction->to_string() << "\n";
  }
  return r.verdict == DispatchVerdict::kOutOfCatalog ? kFalse : kOk;
}

int run_export_dot(const Source& src, const std::string& out) {
  Loaded l = load(src);
  MCayleyDigraph d = build(l.sets);
  emit(out, to_dot(d.digraph(), d.labels()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented m-semiregular representations of finite groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  Source src;
  std::string out;
  auto* build = app.add_subcommand("build", "print the connection sets of a construction");
  add_source(build, src);
  build->add_option("-o,--out", out, "write JSON to this file");
  build->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "decide whether a digraph is an OmSR");
  add_source(verify, src);
  verify->add_flag("--json", as_json);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive search for an OmSR");
  search->add_option("-g,--group", sa.group, "catalog group name")->required();
  search->add_option("-m,--m", sa.m, "number of parts")->check(CLI::PositiveNumber);
  search->add_option("--min-valency", sa.min_valency)->check(CLI::NonNegativeNumber);
  search->add_option("--max-valency", sa.max_valency)->check(CLI::NonNegativeNumber);
  search->add_option("-w,--workers", sa.workers)->check(CLI::PositiveNumber);
  search->add_option("--max-candidates", sa.max_candidates, "0 = unlimited");
  search->add_option("--max-seconds", sa.max_seconds, "0 = unlimited");
  search->add_flag("--no-reductions", sa.no_reductions, "plain enumeration");
  search->add_option("-o,--out", sa.out, "certificate directory");
  search->add_flag("--json", as_json);

  std::string claim_id;
  auto* claims = app.add_subcommand("claims", "arc-count claims of the ORR-based constructions");
  claims->add_option("-c,--construction", claim_id, "orr_lift:... or gendihedral_orr:...")
      ->required();
  claims->add_flag("--json", as_json);

  std::string group;
  int m = 1;
  auto* theorem = app.add_subcommand("theorem", "classification verdict for (G, m)");
  theorem->add_option("-g,--group", group)->required();
  theorem->add_option("-m,--m", m)->required()->check(CLI::PositiveNumber);
  theorem->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT of a construction");
  add_source(dot, src);
  dot->add_option("-o,--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return run_build(src, out, as_json);
    if (*verify) return run_verify(src, as_json);
    if (*search) return run_search(sa, as_json);
    if (*claims) return run_claims(claim_id, as_json);
    if (*theorem) return run_theorem(group, m, as_json);
    if (*dot) return run_export_dot(src, out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "omsr: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "omsr: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "omsr: " << e.what() << "\n";
    return kFalse;
  }
  return kUsage;
}
