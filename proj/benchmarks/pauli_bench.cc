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

#include <random>
#include <vector>

#include "qsg/pauli.hpp"

namespace {

std::vector<qsg::PauliString> random_strings(int n_sites, int count) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<qsg::PauliString> strings;
  strings.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> letters;
    for (int site = 1; site <= n_sites; ++site) {
      letters.emplace_back(site, letter(rng));
    }
    strings.push_back(qsg::PauliString::from_letters(n_sites, letters));
  }
  return strings;
}

void BM_PauliMultiply(benchmark::State& state) {
  const auto strings = random_strings(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    auto product = strings[i & 255] * strings[(i + 1) & 255];
    benchmark::DoNotOptimize(product);
    ++i;
  }
}
BENCHMARK(BM_PauliMultiply)->Arg(8)->Arg(32)->Arg(64);

void BM_ChainTrace(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 3);
  std::vector<int> letters(state.range(0));
  for (auto& a : letters) a = letter(rng);
  for (auto _ : state) {
    auto trace = qsg::chain_trace(letters);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_ChainTrace)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
