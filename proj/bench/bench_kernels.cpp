#include <benchmark/benchmark.h>

#include "crglobal/breakable.hpp"
#include "crglobal/families.hpp"
#include "crglobal/power.hpp"

using namespace crglobal;

namespace {

  // chain2 x Z2 x L_k: completely regular of order 4k.
  CayleyTable member(std::size_t k) {
    CayleyTable const chain2 = validate_table({{0, 1}, {1, 1}});
    CayleyTable const group  = build(family::DirectProduct{build(family::CyclicGroup{2}), build(family::LeftZero{k})});
    return build(family::DirectProduct{chain2, group});
  }

  exec mode(benchmark::State const& state) {
    return state.range(1) == 0 ? exec::serial : exec::parallel;
  }

  void label(benchmark::State& state) {
    state.SetLabel(std::string(state.range(1) == 0 ? "serial" : "parallel") + " n=" + std::to_string(4 * state.range(0)));
  }

  void image_table(benchmark::State& state) {
    CayleyTable const S = member(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      auto img = mode(state) == exec::serial ? kernels::image_table_serial(S) : kernels::image_table_parallel(S);
      benchmark::DoNotOptimize(img.data());
    }
    label(state);
  }

  void ep(benchmark::State& state) {
    PowerSemigroup const P(member(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
      auto v = enumerate_ep(P, 16, mode(state));
      benchmark::DoNotOptimize(v.data());
    }
    label(state);
  }

  void a3(benchmark::State& state) {
    PowerSemigroup const P(member(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
      auto v = enumerate_a3(P, 16, mode(state));
      benchmark::DoNotOptimize(v.data());
    }
    label(state);
  }

}  // namespace

BENCHMARK(image_table)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(ep)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(a3)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
