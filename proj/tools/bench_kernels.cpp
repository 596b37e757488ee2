// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "fqsolve/core.hpp"
#include "fqsolve/oracle.hpp"
#include "fqsolve/transform.hpp"

using namespace fqsolve;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

PolySystem quadratic_system(std::uint32_t q, std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
  auto f = make_field(q);
  std::mt19937_64 g(seed);
  std::vector<Polynomial> polys;
  for (std::uint32_t i = 0; i < m; ++i) {
    Polynomial p(f, n);
    for (int t = 0; t < 2 * static_cast<int>(n); ++t) {
      Monomial e(n, 0);
      ++e[g() % n];
      ++e[g() % n];
      for (auto& x : e) x = std::min<std::uint16_t>(x, static_cast<std::uint16_t>(q - 1));
      p.add_term(e, static_cast<Elem>(1 + g() % (q - 1)));
    }
    p.add_term(Monomial(n, 0), static_cast<Elem>(g() % q));
    polys.push_back(std::move(p));
  }
  return PolySystem(f, n, std::move(polys), 2);
}

void BM_ForwardTransform(benchmark::State& state) {
  auto f = make_field(3);
  const TrimmedLayout layout(3, 12, 10, 2);
  std::vector<Elem> data(layout.size());
  std::mt19937_64 g(1);
  for (auto& x : data) x = static_cast<Elem>(g() % 3);
  for (auto _ : state) {
    auto work = data;
    forward_transform(*f, layout, work, exec_of(state));
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.size()));
}

void BM_InverseTransform(benchmark::State& state) {
  auto f = make_field(4);
  const TrimmedLayout layout(4, 10, 9, 0);
  std::vector<Elem> data(layout.size());
  std::mt19937_64 g(2);
  for (auto& x : data) x = static_cast<Elem>(g() % 4);
  for (auto _ : state) {
    auto work = data;
    inverse_transform(*f, layout, work, exec_of(state));
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.size()));
}

void BM_CountRoots(benchmark::State& state) {
  const auto s = quadratic_system(2, 18, 18, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_common_roots(s, exec_of(state)));
}

void BM_PartialSum(benchmark::State& state) {
  const auto s = quadratic_system(2, 8, 4, 4);
  SolverParams params = SolverParams::defaults(2);
  params.exec = exec_of(state);
  params.t_override = 40;
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum(s, 2, params, RngStream(5)));
}

}  // namespace

BENCHMARK(BM_ForwardTransform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseTransform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountRoots)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
