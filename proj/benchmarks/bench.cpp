#include <benchmark/benchmark.h>

#include <random>

#include "etaunits/class_group.hpp"
#include "etaunits/numeric.hpp"

using namespace etaunits;

static void BM_cusps(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cusps(lv));
}
BENCHMARK(BM_cusps)->Arg(144)->Arg(576);

static void BM_eta_divisor(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    auto labs = canonical_labels(lv);
    for (auto _ : state)
        for (const auto& lab : labs) benchmark::DoNotOptimize(eta_divisor(lv, lab));
}
BENCHMARK(BM_eta_divisor)->Arg(48)->Arg(576);

static void BM_multiplier(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    std::mt19937_64 rng(1);
    UnitBasis B = unit_basis(lv);
    ExponentVector v = B.units[0];
    std::vector<MatrixSL2> gs;
    for (int i = 0; i < 64; ++i) gs.push_back(random_gamma0(lv.N, rng));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(product_multiplier(lv, v, gs[i % gs.size()]));
        ++i;
    }
}
BENCHMARK(BM_multiplier)->Arg(36)->Arg(144);

static void BM_qexp(benchmark::State& state) {
    Level lv = make_level(144);
    for (auto _ : state)
        benchmark::DoNotOptimize(eta_qexp(lv, {1, 1}, state.range(0)));
}
BENCHMARK(BM_qexp)->Arg(100)->Arg(400);

static void BM_rewrite(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    auto labs = all_labels(lv);
    for (auto _ : state)
        for (const auto& lab : labs)
            if (!is_canonical_label(lv, lab))
                benchmark::DoNotOptimize(
                    rewrite_to_canonical(lv, lab, RewriteCheck::none));
}
BENCHMARK(BM_rewrite)->Arg(144)->Arg(576);

static void BM_unit_basis(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(unit_basis(lv));
}
BENCHMARK(BM_unit_basis)->Arg(48)->Arg(144)->Arg(576);

static void BM_snf(benchmark::State& state) {
    std::mt19937_64 rng(7);
    long n = state.range(0);
    IntMatrix A(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) A.at(i, j) = (long)(rng() % 19) - 9;
    for (auto _ : state) benchmark::DoNotOptimize(snf(A));
}
BENCHMARK(BM_snf)->Arg(8)->Arg(16)->Arg(32);

static void BM_class_group(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_group(lv));
}
BENCHMARK(BM_class_group)->Arg(144)->Arg(576);

static void BM_fixed_subgroup(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    ClassGroup G = class_group(lv);
    for (auto _ : state) benchmark::DoNotOptimize(fixed_subgroup_invariants(G));
}
BENCHMARK(BM_fixed_subgroup)->Arg(144)->Arg(576);

static void BM_rationalize(benchmark::State& state) {
    Level lv = make_level(state.range(0));
    ClassGroup G = class_group(lv);
    auto reps = fixed_class_representatives(G);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rationalize(G, reps[i % reps.size()]));
        ++i;
    }
}
BENCHMARK(BM_rationalize)->Arg(96)->Arg(192);

BENCHMARK_MAIN();
