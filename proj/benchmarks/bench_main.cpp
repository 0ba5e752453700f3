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

#include <benchmark/benchmark.h>

#include "omsr/automorphisms.hpp"
#include "omsr/catalog.hpp"
#include "omsr/constructions.hpp"
#include "omsr/search.hpp"
#include "omsr/verdict.hpp"

namespace {

using namespace omsr;

void BM_AutomorphismGroupTrivialFamily(benchmark::State& state) {
  Digraph d = build(trivial_omsr(static_cast<int>(state.range(0)))).digraph();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(d).order());
}
BENCHMARK(BM_AutomorphismGroupTrivialFamily)->Arg(12)->Arg(16)->Arg(20);

void BM_CheckOmsrZ2Large(benchmark::State& state) {
  ConnectionSets t = z2_large_omsr(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_omsr(t).is_omsr);
}
BENCHMARK(BM_CheckOmsrZ2Large)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CheckOmsrExceptional(benchmark::State& state) {
  ConnectionSets t = exceptional_omsr("Z4xZ2^4", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_omsr(t).is_omsr);
}
BENCHMARK(BM_CheckOmsrExceptional)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ProveNonexistenceZ2Cubed(benchmark::State& state) {
  SearchSpace sp;
  sp.group = resolve_group("Z2^3");
  sp.m = 2;
  sp.reductions.group_automorphism_orbits = state.range(0) != 0;
  sp.reductions.part_symmetry = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(prove_nonexistence(sp).candidates_examined);
}
BENCHMARK(BM_ProveNonexistenceZ2Cubed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
