#include <benchmark/benchmark.h>

#include "nsfn/analytic.hpp"
#include "nsfn/arith.hpp"
#include "nsfn/identities.hpp"
#include "nsfn/ns.hpp"
#include "nsfn/qseries.hpp"

namespace {

void BM_BuildSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    nsfn::SieveTables tables = nsfn::build_sieve(limit);
    benchmark::DoNotOptimize(tables.phi(limit));
  }
}
BENCHMARK(BM_BuildSieve)->Arg(100000)->Arg(1000000);

void BM_NsRow(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto row = nsfn::ns_row(n);
    benchmark::DoNotOptimize(row.data());
  }
}
BENCHMARK(BM_NsRow)->Arg(720)->Arg(5040)->Arg(30030);

void BM_NsPointwise(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  const nsfn::SieveTables tables = nsfn::build_sieve(n_max);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      acc += nsfn::ns(12, n, tables);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_NsPointwise)->Arg(10000);

void BM_PolyProduct(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    nsfn::QPolynomial p = nsfn::poly_product(n);
    benchmark::DoNotOptimize(p.coefficients().data());
  }
}
BENCHMARK(BM_PolyProduct)->Arg(100)->Arg(300)->Arg(600);

void BM_Theorem4Sweep(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto report = nsfn::verify_theorem4(n_max, 1);
    benchmark::DoNotOptimize(report.cases_checked);
  }
}
BENCHMARK(BM_Theorem4Sweep)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Theorem3Pair(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsfn::theorem3_lhs(n, 4) == nsfn::theorem3_rhs(n, 4));
  }
}
BENCHMARK(BM_Theorem3Pair)->Arg(360)->Arg(499);

void BM_DirichletPartial(benchmark::State& state) {
  const auto cutoff = static_cast<std::uint64_t>(state.range(0));
  const nsfn::SieveTables tables = nsfn::build_sieve(cutoff);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsfn::dirichlet_partial(6, cutoff, tables));
  }
}
BENCHMARK(BM_DirichletPartial)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
