// Serial reference vs OpenMP kernels.
//
//   ./build/bench/bench_kernels --benchmark_filter=Scan

#include "unitpoly/base_solutions.hpp"
#include "unitpoly/scan_audit.hpp"

#include <benchmark/benchmark.h>

using unitpoly::Integer;

namespace {

void BM_BaseSerial(benchmark::State& state) {
    const Integer n0(static_cast<long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitpoly::serial::enumerate_base_solutions(4, n0));
    }
}

void BM_BaseParallel(benchmark::State& state) {
    const Integer n0(static_cast<long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitpoly::enumerate_base_solutions(4, n0));
    }
}

// Large n0 forces the arbitrary-precision path.
void BM_BaseBigInteger(benchmark::State& state) {
    const Integer n0(static_cast<long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitpoly::enumerate_base_solutions(Integer(2003), n0));
    }
}

void BM_ScanSerial(benchmark::State& state) {
    const Integer n1(static_cast<long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitpoly::serial::scan_residues(5, n1));
    }
}

void BM_ScanParallel(benchmark::State& state) {
    const Integer n1(static_cast<long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitpoly::scan_residues(5, n1));
    }
}

}  // namespace

BENCHMARK(BM_BaseSerial)->Arg(101)->Arg(401)->Arg(1601)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaseParallel)->Arg(101)->Arg(401)->Arg(1601)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaseBigInteger)->Arg(30030)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(29)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(29)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
