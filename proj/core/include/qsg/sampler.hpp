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

#pragma once

#include <cstdint>
#include <vector>

#include "qsg/coupling.hpp"
#include "qsg/hamiltonian.hpp"
#include "qsg/histogram.hpp"
#include "qsg/hypergraph.hpp"

namespace qsg {

struct SamplingConfig {
  Hypergraph graph;
  CouplingDistribution dist;
  std::uint64_t seed = 1;
  int n_samples = 1;
  int k_max = 8;
  std::vector<double> bin_edges;  // histogram binning (strictly increasing)
  int threads = 0;                // 0 = auto; always capped by QSG_THREADS
  int dense_site_cap = HamiltonianSample::kDefaultDenseSiteCap;
  bool keep_eigenvalues = false;  // retain per-sample spectra (small runs)
};

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct SamplingResult {
  EmpiricalDOS dos;
  std::vector<MomentEstimate> moments;  // index k = 0..k_max
  std::vector<std::vector<double>> eigenvalues;  // per sample, when kept

  // Per-sample structural identities: |sum lambda| <= 1e-9 * 2^{n/2} and
  // |2^{-n} sum lambda^2 - sum c^2| <= 1e-9 * sum c^2.
  int identity_violations = 0;
  double max_trace_abs = 0.0;
  double max_sumsq_rel_error = 0.0;
};

/// Draws, materialises and diagonalises `n_samples` Hamiltonians in
/// parallel. Each (seed, sample_index) job is independent; merges are
/// associative and integer-valued or reduced in fixed sample order with
/// pairwise summation, so results do not depend on the worker count.
/// Worker concurrency is clamped so that concurrent dense matrices fit in
/// available memory.
SamplingResult run_sampling(const SamplingConfig& config);

}  // namespace qsg
