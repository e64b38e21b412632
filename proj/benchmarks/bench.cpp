#include <benchmark/benchmark.h>

#include "grunit/catalog.hpp"
#include "grunit/combinatorics.hpp"
#include "grunit/poly_system.hpp"

using namespace grunit;

static void bm_group_ring_product(benchmark::State& state) {
    const auto alpha = catalog_alpha_R();
    const auto beta = catalog_beta_R();
    for (auto _ : state) benchmark::DoNotOptimize(gr_mul(alpha, beta));
}
BENCHMARK(bm_group_ring_product);

static void bm_specialize_prime(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_eighth_root(p));
}
BENCHMARK(bm_specialize_prime)->Arg(17)->Arg(1000000007);

static void bm_generate_system(benchmark::State& state) {
    const SupportPair sp = catalog_supports();
    for (auto _ : state) benchmark::DoNotOptimize(add_normalization(generate_bilinear_system(sp)));
}
BENCHMARK(bm_generate_system);

static void bm_character_reduction(benchmark::State& state) {
    const BilinearSystem sys = add_normalization(generate_bilinear_system(catalog_supports()));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            reduce_by_characters(sys, catalog_phi0(), catalog_phi1(), catalog_chi0_gaussian(), catalog_chi1_gaussian()));
}
BENCHMARK(bm_character_reduction);

static void bm_multiplicity_table(benchmark::State& state) {
    const SupportPair sp = catalog_supports();
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity_table(sp.g_list, sp.h_list));
}
BENCHMARK(bm_multiplicity_table);

static void bm_f2_search_symmetric(benchmark::State& state) {
    const SupportPair sp = catalog_supports();
    F2SearchOptions opts;
    opts.symmetric_perm = support_permutation(sp, catalog_phi0());
    for (auto _ : state) benchmark::DoNotOptimize(search_units_f2(sp.g_list, sp.h_list, opts));
}
BENCHMARK(bm_f2_search_symmetric)->Unit(benchmark::kMillisecond);

static void bm_f2_search_full(benchmark::State& state) {
    const SupportPair sp = catalog_supports();
    F2SearchOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_units_f2(sp.g_list, sp.h_list, opts));
}
BENCHMARK(bm_f2_search_full)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();
BENCHMARK_MAIN();
