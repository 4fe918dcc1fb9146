#include <benchmark/benchmark.h>

#include "tropattack/attack.hpp"
#include "tropattack/csr.hpp"
#include "tropattack/disclog.hpp"
#include "tropattack/expgen.hpp"
#include "tropattack/protocol.hpp"
#include "tropattack/spectral.hpp"

namespace {

using namespace tropattack;

TropMatrix bench_matrix(int d, std::uint64_t seed, long long lo = -100, long long hi = 100) {
    Rng rng(seed);
    return gen_uniform_matrix(d, lo, hi, rng);
}

void BM_MatMul(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    TropMatrix a = bench_matrix(d, 11);
    TropMatrix b = bench_matrix(d, 22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b));
    }
}
BENCHMARK(BM_MatMul)->Arg(32)->Arg(64)->Arg(128);

void BM_MatPow(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    TropMatrix a = bench_matrix(d, 33);
    long long t = power_stability_threshold(d) + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_pow(a, t));
    }
}
BENCHMARK(BM_MatPow)->Arg(16)->Arg(32)->Arg(64);

void BM_MetricMatrix(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    // Entries at most -1 keep every cycle mean negative, so the series
    // converges and the metric matrix is defined.
    TropMatrix a = bench_matrix(d, 44, -100, -1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metric_matrix(a));
    }
}
BENCHMARK(BM_MetricMatrix)->Arg(32)->Arg(64)->Arg(128);

void BM_Disclog(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Rng rng(Rng::derive(55, d, 0));
    TropMatrix h = gen_uniform_matrix(d, -100, 100, rng);
    while (!(TropScalar(0) < max_cycle_mean(h))) {
        h = gen_uniform_matrix(d, -100, 100, rng);
    }
    TropMatrix f = mat_add(TropMatrix::identity(d), h);
    TropMatrix v = gen_uniform_matrix(d, -100, 100, rng);
    long long t = power_stability_threshold(d) + d;
    TropMatrix a = mat_mul(v, mat_pow(f, t));
    DisclogOptions opts;
    opts.monotone_accel = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_disclog({a, v, f}, opts));
    }
}
BENCHMARK(BM_Disclog)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Attack(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Rng rng(Rng::derive(66, d, 0));
    TropMatrix h = gen_uniform_matrix(d, -100, 100, rng);
    while (!(TropScalar(0) < max_cycle_mean(h))) {
        h = gen_uniform_matrix(d, -100, 100, rng);
    }
    TropMatrix m = gen_uniform_matrix(d, -100, 100, rng);
    long long lo = power_stability_threshold(d);
    long long hi = static_cast<long long>(d) * d;
    long long me = static_cast<long long>(rng.uniform_int(lo, hi));
    long long ne = static_cast<long long>(rng.uniform_int(lo, hi));
    Transcript tr = run_protocol({m, h, me, ne});
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_key(m, h, tr.a, tr.b));
    }
}
BENCHMARK(BM_Attack)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
