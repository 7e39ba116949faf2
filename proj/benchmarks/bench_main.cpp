#include "slope_kernel/asymptotics.hpp"
#include "slope_kernel/enumerate.hpp"
#include "slope_kernel/kernel.hpp"
#include "slope_kernel/recurrence.hpp"

#include <benchmark/benchmark.h>

namespace sk = slope_kernel;

static void BM_KnuthSequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::knuth_AB_sequence(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_KnuthSequence)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_DuchonProfile(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::excursion_area_profile(sk::duchon_jumps(), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DuchonProfile)->Arg(500)->Arg(1500)->Unit(benchmark::kMillisecond);

static void BM_SeriesF0G1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::series_F0_G1(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SeriesF0G1)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_KernelRoots(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  const auto kernel = sk::KernelForm::from_jumps(sk::knuth_jumps());
  const sk::Complex z(sk::Real::from_double(0.3, bits), sk::Real::from_double(0.1, bits));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::numeric_branches(kernel, z, bits));
  }
}
BENCHMARK(BM_KernelRoots)->Arg(128)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_RotationLaw(benchmark::State& state) {
  const auto points = sk::rotation_sample_points(4, 128);
  for (auto _ : state) {
    for (const auto& z : points) {
      benchmark::DoNotOptimize(sk::verify_rotation_law(z, 128));
    }
  }
}
BENCHMARK(BM_RotationLaw)->Unit(benchmark::kMillisecond);

static void BM_GuessFourAMinusB(benchmark::State& state) {
  std::vector<sk::BigInt> seq;
  for (const auto& c : sk::knuth_AB_sequence(250)) {
    seq.push_back(4 * c.a - c.b);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::guess_precurrence(seq, {4, 30, 1}));
  }
}
BENCHMARK(BM_GuessFourAMinusB)->Unit(benchmark::kMillisecond);

static void BM_KnuthConstants(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk::knuth_constants(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_KnuthConstants)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
