/* Copyright 2026 The dmc-workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Parallel kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include "dmc/groupoid.hpp"
#include "dmc/instances.hpp"
#include "dmc/lifting.hpp"
#include "dmc/parallel.hpp"
#include "dmc/pullback.hpp"

namespace {

const dmc::InstanceBundle& boolean4() {
  static const dmc::InstanceBundle b = dmc::gen_heyting(dmc::boolean_poset(4), "b4");
  return b;
}

const dmc::InstanceBundle& fragment() {
  static const dmc::InstanceBundle b = [] {
    dmc::GroupoidSiteOptions o;
    o.max_rounds = 1;
    return dmc::gen_groupoid_site({dmc::groupoid_from_spec("cyclic:2", "Z2"),
                                   dmc::groupoid_from_spec("terminal", "one")},
                                  o)
        .bundle;
  }();
  return b;
}

const dmc::InstanceBundle& pick(int which) { return which == 0 ? boolean4() : fragment(); }

void BM_LeftComplement(benchmark::State& state) {
  const auto& b = pick(static_cast<int>(state.range(0)));
  dmc::set_jobs(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dmc::left_complement(b.cat, b.d));
  dmc::set_jobs(0);
}

void BM_LeftComplementReference(benchmark::State& state) {
  const auto& b = pick(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dmc::reference::left_complement(b.cat, b.d));
}

void BM_RightComplement(benchmark::State& state) {
  const auto& b = pick(static_cast<int>(state.range(0)));
  dmc::set_jobs(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dmc::right_complement(b.cat, b.d));
  dmc::set_jobs(0);
}

void BM_RightComplementReference(benchmark::State& state) {
  const auto& b = pick(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dmc::reference::right_complement(b.cat, b.d));
}

void BM_LiftsAgainst(benchmark::State& state) {
  const auto& c = pick(static_cast<int>(state.range(0))).cat;
  const auto ms = c.morphisms();
  for (auto _ : state)
    for (dmc::MorRef f : ms)
      for (dmc::MorRef g : ms) benchmark::DoNotOptimize(dmc::lifts_against(c, f, g));
}

void BM_LiftsAgainstReference(benchmark::State& state) {
  const auto& c = pick(static_cast<int>(state.range(0))).cat;
  const auto ms = c.morphisms();
  for (auto _ : state)
    for (dmc::MorRef f : ms)
      for (dmc::MorRef g : ms) benchmark::DoNotOptimize(dmc::reference::lifts_against(c, f, g));
}

void BM_Pullback(benchmark::State& state) {
  const auto& c = boolean4().cat;
  const auto ms = c.morphisms();
  for (auto _ : state)
    for (dmc::MorRef f : ms)
      for (dmc::MorRef g : ms)
        if (c.dst(f) == c.dst(g)) benchmark::DoNotOptimize(dmc::pullback(c, f, g));
}

void BM_PullbackReference(benchmark::State& state) {
  const auto& c = boolean4().cat;
  const auto ms = c.morphisms();
  for (auto _ : state)
    for (dmc::MorRef f : ms)
      for (dmc::MorRef g : ms)
        if (c.dst(f) == c.dst(g)) benchmark::DoNotOptimize(dmc::reference::pullback(c, f, g));
}

}  // namespace

// range(0): 0 = Boolean lattice on 4 atoms, 1 = one-round groupoid fragment.
// range(1): thread count.
BENCHMARK(BM_LeftComplement)->ArgsProduct({{0, 1}, {1, 2, 4, 8}});
BENCHMARK(BM_LeftComplementReference)->Arg(0)->Arg(1);
BENCHMARK(BM_RightComplement)->ArgsProduct({{0, 1}, {1, 2, 4, 8}});
BENCHMARK(BM_RightComplementReference)->Arg(0)->Arg(1);
BENCHMARK(BM_LiftsAgainst)->Arg(0)->Arg(1);
BENCHMARK(BM_LiftsAgainstReference)->Arg(0)->Arg(1);
BENCHMARK(BM_Pullback);
BENCHMARK(BM_PullbackReference);

BENCHMARK_MAIN();
