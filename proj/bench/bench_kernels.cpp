// Parallel kernels against their serial reference twins.

#include <benchmark/benchmark.h>

#include "planarlab/curves.hpp"
#include "planarlab/difftest.hpp"
#include "planarlab/log.hpp"

using namespace planarlab;

namespace {

// 2-polynomials are planar and APN-free functions are rare, so both give
// full scans over every epsilon.
UniPoly full_scan_poly(unsigned m) { return parse_unipoly("X^4+a*X^2+X", Field::make(m)); }

void BM_is_planar(benchmark::State& st) {
  const UniPoly f = full_scan_poly(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_planar(f).holds);
}

void BM_is_planar_serial(benchmark::State& st) {
  const UniPoly f = full_scan_poly(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::is_planar(f).holds);
}

void BM_is_apn(benchmark::State& st) {
  const UniPoly f = parse_unipoly("X^3", Field::make(static_cast<unsigned>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(is_apn(f).holds);
}

void BM_is_apn_serial(benchmark::State& st) {
  const UniPoly f = parse_unipoly("X^3", Field::make(static_cast<unsigned>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(reference::is_apn(f).holds);
}

BiPoly bench_curve(unsigned m) { return build_planar_curve(parse_unipoly("X^7+a*X^5+X^3", Field::make(m))); }

void BM_count_points(benchmark::State& st) {
  set_log_level(LogLevel::Error);
  const BiPoly g = bench_curve(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_points(g, g.field(), planar_excluded_lines(), 7).total_points);
}

void BM_count_points_serial(benchmark::State& st) {
  set_log_level(LogLevel::Error);
  const BiPoly g = bench_curve(static_cast<unsigned>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(reference::count_points(g, g.field(), planar_excluded_lines(), 7).total_points);
}

}  // namespace

BENCHMARK(BM_is_planar)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_planar_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_apn)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_apn_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_points)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_points_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
