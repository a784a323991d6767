// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "aobs/feasibility.hpp"
#include "aobs/measures.hpp"
#include "aobs/montecarlo.hpp"
#include "aobs/observation.hpp"
#include "aobs/scenarios.hpp"

namespace {

void BM_BuildCycleSpace(benchmark::State& state) {
    const int cycles = static_cast<int>(state.range(0));
    for (auto _ : state) {
        aobs::Model model =
            aobs::hartle_srednicki(cycles, cycles / 2, aobs::Rational(1, 2));
        benchmark::DoNotOptimize(model.space.atom_count());
    }
}
BENCHMARK(BM_BuildCycleSpace)->Arg(4)->Arg(6)->Arg(8);

void BM_ThirderGivenColour(benchmark::State& state) {
    const int cycles = static_cast<int>(state.range(0));
    aobs::Model model =
        aobs::hartle_srednicki(cycles, cycles / 2, aobs::Rational(1, 2));
    int red = model.space.base().find_colour("R");
    const aobs::Event& sr = *model.find_event("SR");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aobs::thirder_given_colour(model.space, sr, red));
    }
}
BENCHMARK(BM_ThirderGivenColour)->Arg(6)->Arg(8);

void BM_SolveFourPrinciples(benchmark::State& state) {
    aobs::Model sb = aobs::sleeping_beauty();
    const std::set<aobs::Principle> all = {
        aobs::Principle::PN, aobs::Principle::PI, aobs::Principle::PEI,
        aobs::Principle::PP};
    for (auto _ : state) {
        benchmark::DoNotOptimize(aobs::solve(aobs::compile(sb.space, all)).status);
    }
}
BENCHMARK(BM_SolveFourPrinciples);

void BM_SequentialPolytopes(benchmark::State& state) {
    const int horizon = static_cast<int>(state.range(0));
    std::vector<aobs::Rational> hazards;
    for (int i = 0; i < horizon; ++i) hazards.emplace_back(1, 3);
    hazards.emplace_back(1);
    aobs::SequentialModel seq(hazards, 2);
    for (auto _ : state) {
        auto pei = aobs::compile(seq.space(), {aobs::Principle::PN, aobs::Principle::PEI});
        auto pnfi = aobs::compile(seq.space(),
                                  {aobs::Principle::PN, aobs::Principle::PNFI}, &seq);
        benchmark::DoNotOptimize(aobs::same_solution_polytope(pei, pnfi));
    }
}
BENCHMARK(BM_SequentialPolytopes)->Arg(2)->Arg(3);

void BM_TwoZoneEstimate(benchmark::State& state) {
    aobs::Sampler sampler = aobs::make_two_zone_sampler(10000, 0.01, 0.01, 0.5);
    aobs::EstimateOptions options{static_cast<std::int64_t>(state.range(0)), 7, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aobs::estimate_halfer(sampler, true, options).value);
    }
}
BENCHMARK(BM_TwoZoneEstimate)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
