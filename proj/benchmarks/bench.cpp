#include <benchmark/benchmark.h>

#include "maxff/curve.hpp"
#include "maxff/gaps.hpp"
#include "maxff/gf.hpp"
#include "maxff/iso.hpp"
#include "maxff/maps.hpp"

using namespace maxff;

static void BM_field_context(benchmark::State& state) {
    const long q = state.range(0);
    for (auto _ : state) {
        Gf F(q);
        benchmark::DoNotOptimize(F.alpha());
    }
}
BENCHMARK(BM_field_context)->Arg(25)->Arg(49);

static void BM_count_places_fast(benchmark::State& state) {
    const long q = state.range(0);
    Gf F(q);
    const CurveIndex c = validate_index(q, 1);
    for (auto _ : state) benchmark::DoNotOptimize(count_places(F, c, CountMethod::Fast));
}
BENCHMARK(BM_count_places_fast)->Arg(13)->Arg(25)->Arg(49);

static void BM_count_places_naive(benchmark::State& state) {
    const long q = state.range(0);
    Gf F(q);
    const CurveIndex c = validate_index(q, 1);
    for (auto _ : state) benchmark::DoNotOptimize(count_places(F, c, CountMethod::Naive));
}
BENCHMARK(BM_count_places_naive)->Arg(13)->Arg(25);

static void BM_gap_set(benchmark::State& state) {
    const long q = state.range(0);
    const CurveIndex c = validate_index(q, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gap_set(c, PlaceClass::Infinity));
}
BENCHMARK(BM_gap_set)->Arg(13)->Arg(49);

static void BM_partition_classes(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(partition_classes(d));
}
BENCHMARK(BM_partition_classes)->Arg(999)->Arg(9999);

static void BM_phi2_brute(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(phi2(d, CountMode::BruteForce));
}
BENCHMARK(BM_phi2_brute)->Arg(9999)->Arg(99999);

static void BM_phi2_closed(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(phi2(d, CountMode::ClosedForm));
}
BENCHMARK(BM_phi2_closed)->Arg(9999)->Arg(99999);

static void BM_preserves_relation(benchmark::State& state) {
    const long q = state.range(0);
    Gf F(q);
    const long d = (q + 1) / 2;
    const CurveIndex c = validate_index(q, 1);
    const MonomialMap m = iso_map(F, 1, 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(preserves_relation(F, m, c, c));
    (void)d;
}
BENCHMARK(BM_preserves_relation)->Arg(13)->Arg(25);

BENCHMARK_MAIN();
