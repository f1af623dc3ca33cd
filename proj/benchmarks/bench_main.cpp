#include "exprimes/bounds.hpp"
#include "exprimes/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace exprimes;

namespace {

const NewformFixture& level81() {
    static const NewformFixture fx = load_fixture(std::string(EXPRIMES_FIXTURE_DIR) + "/81-6c.json");
    return fx;
}

void BM_BoundLevel81(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reducible_candidates(6, 81));
}
BENCHMARK(BM_BoundLevel81)->Unit(benchmark::kMillisecond);

void BM_BoundLevel11Serial(benchmark::State& state) {
    BoundOptions opt;
    opt.parallel = false;
    for (auto _ : state) benchmark::DoNotOptimize(reducible_candidates(4, 11, opt));
}
BENCHMARK(BM_BoundLevel11Serial)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
    const Integer n = ipow(Integer(2), 67) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMillisecond);

void BM_VerifyAt43(benchmark::State& state) {
    VerifyOptions opt;
    opt.nu = DirichletCharacter::from_index(9, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_reducible(level81(), 43, opt));
}
BENCHMARK(BM_VerifyAt43)->Unit(benchmark::kMillisecond);

void BM_ScanAt5(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_scan(level81(), 5, 100));
}
BENCHMARK(BM_ScanAt5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
