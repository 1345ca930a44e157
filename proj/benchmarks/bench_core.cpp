// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <vector>

#include "dude/d2d.hpp"
#include "dude/geometry.hpp"
#include "dude/mobility.hpp"
#include "dude/powersave.hpp"
#include "dude/scenario.hpp"

namespace {

using namespace dude;

void BM_PathLoss(benchmark::State& state)
{
    double d = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(path_loss_db(d));
        d = d < 1e4 ? d + 1.0 : 1.0;
    }
}
BENCHMARK(BM_PathLoss);

void BM_SinrThreeInterferers(benchmark::State& state)
{
    const std::vector<double> interferers{-95.0, -99.0, -104.0};
    for (auto _ : state) benchmark::DoNotOptimize(sinr_db(-80.0, interferers, -102.0));
}
BENCHMARK(BM_SinrThreeInterferers);

void BM_PowerSaved(benchmark::State& state)
{
    const PowerControlConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(power_saved_mw(600.0, 300.0, cfg));
}
BENCHMARK(BM_PowerSaved);

void BM_Classify(benchmark::State& state)
{
    const NetworkLayout layout;
    const double k = dl_constant_k(layout);
    double x = -900.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify({x, 40.0}, layout, k));
        x = x < 900.0 ? x + 0.5 : -900.0;
    }
}
BENCHMARK(BM_Classify);

void BM_ZonePair(benchmark::State& state)
{
    const NetworkLayout layout;
    const PowerControlConfig pc;
    const D2DConfig d2d;
    for (auto _ : state) benchmark::DoNotOptimize(zone_pair({350.0, 20.0}, layout, pc, d2d));
}
BENCHMARK(BM_ZonePair);

void BM_RegionAreaMc(benchmark::State& state)
{
    const NetworkLayout layout;
    const double k = dl_constant_k(layout);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_area_mc(layout, k, n, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RegionAreaMc)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SimulateTrajectory(benchmark::State& state)
{
    const NetworkLayout layout;
    const double k = dl_constant_k(layout);
    const MobilityParams params;
    std::uint64_t i = 0;
    for (auto _ : state) {
        Rng rng = device_rng(12345, i++);
        const Point start = draw_start(params, rng);
        benchmark::DoNotOptimize(simulate_trajectory(start, layout, k, params, 30.0 / 3.6, 1e6, rng));
    }
}
BENCHMARK(BM_SimulateTrajectory)->Unit(benchmark::kMicrosecond);

void BM_TransitCampaign(benchmark::State& state)
{
    const ScenarioConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(run_transit_campaign(cfg));
}
BENCHMARK(BM_TransitCampaign)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
