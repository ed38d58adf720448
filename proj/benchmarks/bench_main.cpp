#include <benchmark/benchmark.h>

#include "radcen/balance.hpp"
#include "radcen/centers.hpp"
#include "radcen/potentials.hpp"

using namespace radcen;

namespace {

const Body& triangle() {
    static const Body b{Polygon({{0, 0}, {4, 0}, {0, 3}})};
    return b;
}

const Body& octagon() {
    static const Body b = [] {
        std::vector<Point> v;
        for (int k = 0; k < 8; ++k) v.push_back(unit_vector(kTwoPi * k / 8 + 0.1) * (1.0 + 0.2 * (k % 2)));
        return Body{Polygon(v)};
    }();
    return b;
}

void BM_RieszValue(benchmark::State& st) {
    const double alpha = st.range(0) / 2.0;
    for (auto _ : st) benchmark::DoNotOptimize(riesz_value(octagon(), {0.1, 0.2}, Riesz{alpha}).value);
}
BENCHMARK(BM_RieszValue)->Arg(-2)->Arg(0)->Arg(1)->Arg(6);

void BM_RieszGradient(benchmark::State& st) {
    const double alpha = st.range(0) / 2.0;
    for (auto _ : st) benchmark::DoNotOptimize(riesz_gradient(octagon(), {0.1, 0.2}, Riesz{alpha}));
}
BENCHMARK(BM_RieszGradient)->Arg(-2)->Arg(0)->Arg(1)->Arg(6);

void BM_PoissonGradient(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(poisson_gradient(octagon(), {0.1, 0.2}, Poisson{0.5}));
}
BENCHMARK(BM_PoissonGradient);

void BM_HeatGradient(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(heat_gradient(octagon(), {0.1, 0.2}, Heat{0.1}));
}
BENCHMARK(BM_HeatGradient);

void BM_FindCenter(benchmark::State& st) {
    const auto spec = PotentialSpec::riesz(st.range(0) / 2.0);
    for (auto _ : st) benchmark::DoNotOptimize(find_center(triangle(), spec).point);
}
BENCHMARK(BM_FindCenter)->Arg(1)->Arg(6)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CircleClip(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(circle_clip(octagon(), {0.1, 0.2}, 0.9).measure());
}
BENCHMARK(BM_CircleClip);

void BM_BalanceReport(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(balance_report(triangle(), centroid(triangle())).sup_residual);
}
BENCHMARK(BM_BalanceReport)->Unit(benchmark::kMillisecond);

void BM_Incenter(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(incenter(octagon()).radius);
}
BENCHMARK(BM_Incenter);

}  // namespace
BENCHMARK_MAIN();
