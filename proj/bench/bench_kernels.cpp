/*
   Copyright 2026 The reciprodick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "reciprodick/classifier.hpp"
#include "reciprodick/codes.hpp"

using namespace reciprodick;

namespace {

ScanRange field_range() {
  ScanRange r;
  r.n_min = 1;
  r.n_max = 200;
  r.k_min = 0;
  r.k_max = 12;
  return r;
}

void BM_ScanT3_4Serial(benchmark::State& state) {
  const ScanRange r = field_range();
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(TheoremId::T3_4, r));
}

void BM_ScanT3_4Parallel(benchmark::State& state) {
  const ScanRange r = field_range();
  for (auto _ : state) benchmark::DoNotOptimize(scan(TheoremId::T3_4, r));
}

void BM_ScanL1Serial(benchmark::State& state) {
  ScanRange r = field_range();
  r.n_max = 60;
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(TheoremId::L1, r));
}

void BM_ScanL1Parallel(benchmark::State& state) {
  ScanRange r = field_range();
  r.n_max = 60;
  for (auto _ : state) benchmark::DoNotOptimize(scan(TheoremId::L1, r));
}

// x^12 - 1 over F_3 divided by (x - 1): 3^11 codewords.
CyclicCode large_code() { return build_cyclic_code(3, 12, Poly(Ring::prime_field(3), {2, 1})); }

void BM_EnumerateSerial(benchmark::State& state) {
  const CyclicCode c = large_code();
  for (auto _ : state) benchmark::DoNotOptimize(verify_reversibility_by_enumeration_serial(c));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const CyclicCode c = large_code();
  for (auto _ : state) benchmark::DoNotOptimize(verify_reversibility_by_enumeration(c));
}

}  // namespace

BENCHMARK(BM_ScanT3_4Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanT3_4Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanL1Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanL1Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
