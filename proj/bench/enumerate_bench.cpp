// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Serial-reference vs OpenMP comparison for the two data-parallel kernels:
// 256-cell form enumeration and batch record evaluation.
//
//   ./syllo_bench                # everything
//   ./syllo_bench --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include "syllo/corpus.hpp"
#include "syllo/evaluate.hpp"
#include "syllo/oracle.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int max_universe = static_cast<int>(state.range(0));
  for (auto _ : state) {
    syllo::FormTable t = syllo::enumerate_forms_serial(true, max_universe);
    benchmark::DoNotOptimize(t.count_valid());
  }
}
BENCHMARK(BM_EnumerateSerial)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int max_universe = static_cast<int>(state.range(0));
  for (auto _ : state) {
    syllo::FormTable t = syllo::enumerate_forms(true, max_universe);
    benchmark::DoNotOptimize(t.count_valid());
  }
}
BENCHMARK(BM_EnumerateParallel)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EvaluateSerial(benchmark::State& state) {
  const auto records = syllo::make_validity_corpus({});
  syllo::EvalOptions opts;
  opts.parallel = false;
  for (auto _ : state) {
    auto out = syllo::evaluate(records, syllo::PipelineId::Rules, opts);
    benchmark::DoNotOptimize(out.metrics.accuracy);
  }
}
BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond);

void BM_EvaluateParallel(benchmark::State& state) {
  const auto records = syllo::make_validity_corpus({});
  syllo::EvalOptions opts;
  opts.parallel = true;
  for (auto _ : state) {
    auto out = syllo::evaluate(records, syllo::PipelineId::Rules, opts);
    benchmark::DoNotOptimize(out.metrics.accuracy);
  }
}
BENCHMARK(BM_EvaluateParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
