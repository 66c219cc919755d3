// Copyright 2026 The qsg authors
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

#include "qsg/moment_oracle.hpp"
#include "qsg/partitions.hpp"

namespace {

void BM_ExpectedMomentChain(benchmark::State& state) {
  const auto graph = qsg::Hypergraph::cycle_chain(static_cast<int>(state.range(0)));
  const qsg::CouplingDistribution gauss(qsg::CouplingKind::standard_normal);
  qsg::OracleOptions options;
  options.threads = 1;
  for (auto _ : state) {
    auto breakdown = qsg::expected_moment(graph, gauss, 4, options);
    benchmark::DoNotOptimize(breakdown.total);
  }
}
BENCHMARK(BM_ExpectedMomentChain)->Arg(4)->Arg(8)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_ExpectedMomentSixth(benchmark::State& state) {
  const auto graph = qsg::Hypergraph::cycle_chain(4);
  const qsg::CouplingDistribution gauss(qsg::CouplingKind::standard_normal);
  qsg::OracleOptions options;
  options.threads = 1;
  for (auto _ : state) {
    auto breakdown = qsg::expected_moment(graph, gauss, 6, options);
    benchmark::DoNotOptimize(breakdown.total);
  }
}
BENCHMARK(BM_ExpectedMomentSixth)->Unit(benchmark::kMillisecond);

void BM_PartitionEnumeration(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t crossings = 0;
    qsg::for_each_pair_partition(k, [&](const qsg::PairPartition& p) {
      crossings += p.crossing_number();
    });
    benchmark::DoNotOptimize(crossings);
  }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(8)->Arg(12)->Arg(14)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
