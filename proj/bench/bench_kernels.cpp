// Serial reference kernels against their OpenMP counterparts. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include "liefoliate/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace liefoliate;

namespace {

struct Samples {
  std::vector<sl::Matrix> xs, ys, gs;
};

const Samples& samples(int rank) {
  static std::vector<Samples> cache(8);
  auto& s = cache[static_cast<std::size_t>(rank)];
  if (s.xs.empty()) {
    std::mt19937_64 eng(99);
    for (int i = 0; i < 256; ++i) {
      s.xs.push_back(sl::random_traceless(rank, eng));
      s.ys.push_back(sl::random_traceless(rank, eng));
      s.gs.push_back(sl::random_sl(rank, eng));
    }
  }
  return s;
}

template <auto Kernel>
void killing(benchmark::State& state) {
  const auto& s = samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(s.xs, s.ys));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.xs.size()));
}

template <auto Kernel>
void iwasawa(benchmark::State& state) {
  const auto& s = samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(s.gs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.gs.size()));
}

template <auto Kernel>
void weyl(benchmark::State& state) {
  const auto rs = build_root_system(Family::E8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rs));
}

template <auto Kernel>
void triple(benchmark::State& state) {
  const auto q = sl::orthonormalize(sl::p_subspace(static_cast<int>(state.range(0))).basis);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(q));
}

}  // namespace

BENCHMARK(killing<kernels::ref::killing_batch>)->Name("killing/ref")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(killing<kernels::omp::killing_batch>)->Name("killing/omp")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(iwasawa<kernels::ref::iwasawa_batch>)->Name("iwasawa/ref")->Arg(2)->Arg(6);
BENCHMARK(iwasawa<kernels::omp::iwasawa_batch>)->Name("iwasawa/omp")->Arg(2)->Arg(6);
BENCHMARK(weyl<kernels::ref::weyl_closure>)->Name("weyl_closure_E8/ref");
BENCHMARK(weyl<kernels::omp::weyl_closure>)->Name("weyl_closure_E8/omp");
BENCHMARK(triple<kernels::ref::triple_residual>)->Name("triple_residual/ref")->Arg(3)->Arg(4);
BENCHMARK(triple<kernels::omp::triple_residual>)->Name("triple_residual/omp")->Arg(3)->Arg(4);

BENCHMARK_MAIN();
