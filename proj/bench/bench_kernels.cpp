// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/fock.hpp"
#include "htau/genfun.hpp"

namespace {

htau::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? htau::Exec::serial : htau::Exec::parallel;
}

void warm_tables() {
  for (int d = 1; d <= 6; ++d) {
    htau::default_char_table().warm(d);
    htau::default_spin_table().warm(d);
  }
}

void BM_PhiSchur(benchmark::State& state) {
  warm_tables();
  for (auto _ : state) benchmark::DoNotOptimize(htau::build_phi_schur(6, 3, exec_of(state)));
}

void BM_PhiBQ(benchmark::State& state) {
  warm_tables();
  for (auto _ : state) benchmark::DoNotOptimize(htau::build_phiB_q(6, 3, exec_of(state)));
}

void BM_Theorem(benchmark::State& state) {
  warm_tables();
  for (auto _ : state) benchmark::DoNotOptimize(htau::verify_theorem(5, 3, exec_of(state)));
}

void BM_Anticommutators(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(htau::check_anticommutators(6, exec_of(state)));
}

void BM_Factorization(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(htau::factorization_check(6, exec_of(state)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the parallel kernel.
BENCHMARK(BM_PhiSchur)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiBQ)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Theorem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Anticommutators)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Factorization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
