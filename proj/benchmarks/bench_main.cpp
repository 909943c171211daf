#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "degbound/appendix_calculus.hpp"
#include "degbound/exact_arith.hpp"
#include "degbound/sphere_bounds.hpp"
#include "degbound/stabilizer_code.hpp"
#include "degbound/thresholds.hpp"

using namespace degbound;

namespace {

std::string read_fixture(const char *name) {
    std::ifstream in(std::string(DEGBOUND_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void BM_SphereSum(benchmark::State &state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphere_sum(n, 7));
    }
}
BENCHMARK(BM_SphereSum)->Arg(100)->Arg(1000)->Arg(10000);

void BM_QHammingMaxK(benchmark::State &state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qhamming_max_k(n, 3));
    }
}
BENCHMARK(BM_QHammingMaxK)->Arg(60)->Arg(2000);

void BM_ComputeN(benchmark::State &state) {
    const std::int64_t t = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_N(t, 1));
    }
}
BENCHMARK(BM_ComputeN)->DenseRange(1, 7, 3)->Unit(benchmark::kMillisecond);

void BM_FiveQubitDistance(benchmark::State &state) {
    auto code = StabilizerCode::parse(read_fixture("five_qubit.stab"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(code));
    }
}
BENCHMARK(BM_FiveQubitDistance);

void BM_ShorAnalyze(benchmark::State &state) {
    auto code = StabilizerCode::parse(read_fixture("shor9.stab"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(code));
    }
}
BENCHMARK(BM_ShorAnalyze)->Unit(benchmark::kMillisecond);

void BM_HPrimeSign(benchmark::State &state) {
    const std::int64_t t = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hprime_sign(t, BigRational(2 * t)));
    }
}
BENCHMARK(BM_HPrimeSign)->Arg(1)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
