// Copyright 2026 The entshare Authors
//
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


#include <benchmark/benchmark.h>

#include "entshare/codes.hpp"
#include "entshare/schemes.hpp"
#include "entshare/states.hpp"

namespace {

using entshare::ShareSet;

void BM_ErasureCorrectable(benchmark::State& state) {
  const auto code = entshare::builtin("shor_9_1_3");
  const auto all = ShareSet::all(code.n).mask();
  for (auto _ : state) {
    int count = 0;
    for (std::uint32_t m = 0; m <= all; ++m) {
      count += entshare::erasure_correctable(code, ShareSet(m)) ? 1 : 0;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ErasureCorrectable);

void BM_PartialTrace(benchmark::State& state) {
  const auto scheme = entshare::build_scheme(entshare::builtin("shor_9_1_3"));
  const auto keep = [] {
    auto labels = entshare::share_labels(ShareSet{1, 2, 3, 4, 7});
    labels.insert(labels.begin(), entshare::kDealer);
    return labels;
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(entshare::partial_trace(scheme.encoded_state, keep));
  }
}
BENCHMARK(BM_PartialTrace);

void BM_ClassifyAll(benchmark::State& state, const char* name) {
  const auto scheme = entshare::build_scheme(entshare::builtin(name));
  entshare::ClassifyOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entshare::classify_all(scheme, opts));
  }
}
BENCHMARK_CAPTURE(BM_ClassifyAll, code_4_2_2, "code_4_2_2")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClassifyAll, code_6_4_2, "code_6_4_2")->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
