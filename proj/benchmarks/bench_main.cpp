#include <benchmark/benchmark.h>

#include "mcayley/autgroup.hpp"
#include "mcayley/certifier.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/report.hpp"

using namespace mcayley;

namespace {

FiniteGroup z34() { return make_power(make_cyclic(3), 4); }

void BM_Build(benchmark::State& state) {
  const auto g = z34();
  const auto c = construct_hor(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build(g, c.matrix));
  state.SetLabel(std::to_string(g.order() * state.range(0)) + " vertices");
}
BENCHMARK(BM_Build)->DenseRange(2, 8, 2);

void BM_Automorphisms(benchmark::State& state) {
  const auto g = z34();
  const auto d = build(g, construct_hor(g, static_cast<std::size_t>(state.range(0))).matrix);
  AutSearchOptions opts;
  opts.vertex_cap = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(search_automorphisms(d, opts));
}
BENCHMARK(BM_Automorphisms)->DenseRange(2, 8, 1)->Unit(benchmark::kMillisecond);

void BM_Construct(benchmark::State& state) {
  const auto g = make_power(make_cyclic(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(construct_hor(g, 5));
}
BENCHMARK(BM_Construct);

void BM_Certify(benchmark::State& state, FiniteGroup g, std::size_t m, Mode mode) {
  SearchSpec spec;
  spec.m = m;
  spec.mode = mode;
  for (auto _ : state) benchmark::DoNotOptimize(certify(g, spec));
}
BENCHMARK_CAPTURE(BM_Certify, Q8_2_hor, make_quaternion8(), 2, Mode::hor)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Certify, Z2_3_2_posr, make_elementary_abelian_2(3), 2, Mode::posr)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Certify, Z1_6_hor, make_cyclic(1), 6, Mode::hor)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
