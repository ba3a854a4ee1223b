// Microbenchmarks for the enumeration oracle, the bucketed queries and the
// verification sweeps.

#include <benchmark/benchmark.h>

#include "oddlen/class_spec.hpp"
#include "oddlen/closed_form.hpp"
#include "oddlen/oracle.hpp"
#include "oddlen/verify.hpp"

namespace {

using namespace oddlen;

void BM_BuildBucketTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const BucketTable table = build_bucket_table(n);
    benchmark::DoNotOptimize(table.total_permutations());
  }
}
BENCHMARK(BM_BuildBucketTable)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_BucketedQuery(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BucketTable table = build_bucket_table(n);
  const ClassSpec c(n, {1}, {3, 5});
  for (auto _ : state) {
    SignedPoly p = signed_poly(c, Population::FullSn, &table);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BucketedQuery)->DenseRange(6, 10);

void BM_FilteredQuery(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassSpec c(n, {1}, {3, 5});
  for (auto _ : state) {
    SignedPoly p = signed_poly(c, Population::FullSn);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_FilteredQuery)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_Distribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SignedPoly d = distribution(n);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Distribution)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassSpec c(n, {1}, {3, 5});
  for (auto _ : state) {
    SignedPoly p = unmixed_formula(c);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ClosedForm)->DenseRange(6, 10);

void BM_ScanMain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BucketTable table = build_bucket_table(n);
  for (auto _ : state) {
    ScanReport r = scan_theorem_main(table);
    benchmark::DoNotOptimize(r.cases_checked);
  }
}
BENCHMARK(BM_ScanMain)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
