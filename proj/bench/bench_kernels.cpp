#include <random>

#include <benchmark/benchmark.h>

#include "nodalstab/kernels.hpp"

using namespace nodalstab;

namespace {

std::vector<ShapeForms> shape_family(std::size_t n) {
  std::mt19937_64 rng(42);
  auto uni = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  std::vector<ShapeForms> fam;
  while (fam.size() < n) {
    const Int alpha = 6;
    std::vector<Int> trks{uni(1, 2), uni(3, 4), 5};
    LinearForm chi;
    for (std::size_t k = 0; k < trks.size(); ++k) chi.emplace_back(uni(-9, 9), uni(1, 3));
    std::vector<std::vector<Int>> gens;
    for (int g = 0; g < 3; ++g) gens.push_back({uni(1, 4), uni(1, 4), uni(1, 4)});
    fam.push_back(make_shape_forms(alpha, trks, chi, TensorSupport(3, 4, gens)));
  }
  return fam;
}

std::vector<ConeFunction> cone_functions(Int alpha, Int a) {
  std::vector<ConeFunction> out;
  for (auto& cf : enumerate_cone_functions(alpha, a)) {
    if (cf.s() > 0) out.push_back(std::move(cf));
  }
  return out;
}

kernels::WeightBox weight_box(Int bound) {
  return kernels::WeightBox{{3, 2, 2}, {1, 2, 1}, {{{2, 0, 0}, {0, 1, 1}}, {{1, 1}}, {{2, 0}, {0, 2}}}, bound};
}

void BM_ShapesSerial(benchmark::State& state) {
  const auto fam = shape_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_shapes_serial(fam, DeltaMode{Rational(3, 2)}, Strictness::Semi));
}
void BM_ShapesParallel(benchmark::State& state) {
  const auto fam = shape_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_shapes_parallel(fam, DeltaMode{Rational(3, 2)}, Strictness::Semi));
}

void BM_K0Serial(benchmark::State& state) {
  const auto cfs = cone_functions(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep_k0_serial(cfs));
}
void BM_K0Parallel(benchmark::State& state) {
  const auto cfs = cone_functions(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep_k0_parallel(cfs));
}

void BM_BoxSerial(benchmark::State& state) {
  const auto box = weight_box(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_weight_box_serial(box));
}
void BM_BoxParallel(benchmark::State& state) {
  const auto box = weight_box(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_weight_box_parallel(box));
}

}  // namespace

BENCHMARK(BM_ShapesSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShapesParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_K0Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_K0Parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoxSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoxParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
