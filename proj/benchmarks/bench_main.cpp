#include <benchmark/benchmark.h>

#include <transgen/engine.hpp>
#include <transgen/poset.hpp>
#include <transgen/sweeps.hpp>

using namespace transgen;

static void BM_factorize(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize)->Arg(12)->Arg(1000003)->Arg((std::uint64_t(1) << 35) * 15);

static void BM_ws(benchmark::State& state) {
    std::uint64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ws(n));
}
BENCHMARK(BM_ws)->Arg(96)->Arg(1 << 20);

static void BM_binom_central(benchmark::State& state) {
    std::uint64_t k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(binom(k, k / 2));
}
BENCHMARK(BM_binom_central)->Arg(64)->Arg(1024)->Arg(100000);

static void BM_certified_floor_generic(benchmark::State& state) {
    // c n / sqrt(log2 n) without cache reuse
    long n = state.range(0);
    for (auto _ : state) {
        Expr e = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(n)),
                          expr_sqrt(expr_log2(expr_int(n))));
        benchmark::DoNotOptimize(certified_floor(e));
    }
}
BENCHMARK(BM_certified_floor_generic)->Arg(36)->Arg(1261)->Arg(1 << 20);

static void BM_certified_floor_exact_tie(benchmark::State& state) {
    for (auto _ : state) {
        Expr e = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(4096)),
                          expr_sqrt(expr_log2(expr_int(4096))));
        benchmark::DoNotOptimize(certified_floor(e));
    }
}
BENCHMARK(BM_certified_floor_exact_tie);

static void BM_width_rank(benchmark::State& state) {
    ChainProduct p = ChainProduct::divisor_lattice(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(width_rank(p));
}
BENCHMARK(BM_width_rank)->Arg(720720)->Arg(1 << 19);

static void BM_width_oracle(benchmark::State& state) {
    ChainProduct p({4, 4, 4, 4, 4});  // 1024 elements
    for (auto _ : state) benchmark::DoNotOptimize(width_oracle(p));
}
BENCHMARK(BM_width_oracle);

static void BM_table61_regeneration(benchmark::State& state) {
    for (auto _ : state) {
        Engine eng;
        benchmark::DoNotOptimize(eng.regenerate_table61());
    }
}
BENCHMARK(BM_table61_regeneration)->Unit(benchmark::kMillisecond);

static void BM_tableA3_regeneration(benchmark::State& state) {
    for (auto _ : state) {
        Engine eng;
        benchmark::DoNotOptimize(eng.regenerate_tableA3());
    }
}
BENCHMARK(BM_tableA3_regeneration)->Unit(benchmark::kMillisecond);

static void BM_certify(benchmark::State& state) {
    Engine eng;
    eng.regenerate_tableA3();
    mpz_class d(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eng.certify(d));
}
BENCHMARK(BM_certify)->Arg(36)->Arg(3072)->Unit(benchmark::kMicrosecond);

static void BM_lucas_lehmer(benchmark::State& state) {
    unsigned e = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(is_mersenne_exponent(e));
}
BENCHMARK(BM_lucas_lehmer)->Arg(31)->Arg(61);

BENCHMARK_MAIN();
