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

#include "qsg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "qsg/spectrum.hpp"
#include "qsg/threads.hpp"

namespace qsg {

namespace {

/// MemAvailable from /proc/meminfo in bytes; conservative fallback when the
/// file is unreadable.
std::uint64_t available_memory_bytes() {
  std::ifstream meminfo("/proc/meminfo");
  std::string key;
  std::uint64_t value = 0;
  std::string unit;
  while (meminfo >> key >> value >> unit) {
    if (key == "MemAvailable:") return value * 1024;
  }
  return std::uint64_t{4} << 30;
}

int memory_capped_workers(int workers, int n_sites) {
  // Dense matrix plus solver workspace, with headroom.
  const double per_worker =
      16.0 * std::pow(4.0, n_sites) * 1.15 + (64 << 20);
  const double budget = 0.75 * static_cast<double>(available_memory_bytes());
  const int cap = std::max(1, static_cast<int>(budget / per_worker));
  return std::min(workers, cap);
}

}  // namespace

SamplingResult run_sampling(const SamplingConfig& config) {
  if (config.n_samples < 1) {
    throw std::invalid_argument("run_sampling: n_samples must be positive");
  }
  if (config.k_max < 0) {
    throw std::invalid_argument("run_sampling: k_max must be >= 0");
  }
  const int n = config.graph.n_vertices();
  if (n > config.dense_site_cap) {
    throw std::runtime_error(
        "run_sampling: " + std::to_string(n) +
        " sites exceeds the dense diagonalisation cap of " +
        std::to_string(config.dense_site_cap));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const int samples = config.n_samples;

  int workers = std::min(resolve_thread_count(config.threads), samples);
  workers = memory_capped_workers(workers, n);

  // Per-sample storage indexed by sample, so reductions run in sample order
  // independent of the worker schedule.
  std::vector<std::vector<double>> moments_by_k(
      config.k_max + 1, std::vector<double>(samples, 0.0));
  std::vector<double> trace_abs(samples, 0.0);
  std::vector<double> sumsq_rel(samples, 0.0);
  std::vector<EmpiricalDOS> histograms(
      workers, EmpiricalDOS(config.bin_edges, dim));
  SamplingResult result{EmpiricalDOS(config.bin_edges, dim), {}, {}, 0, 0.0, 0.0};
  if (config.keep_eigenvalues) result.eigenvalues.resize(samples);

  auto worker = [&](int worker_id) {
    for (int s = worker_id; s < samples; s += workers) {
      const auto sample = HamiltonianSample::draw(
          config.graph, config.dist, config.seed,
          static_cast<std::uint64_t>(s));
      Eigen::MatrixXcd dense = sample.to_dense(config.dense_site_cap);
      const Spectrum spectrum = eigenvalues_inplace(dense);
      dense.resize(0, 0);

      histograms[worker_id].accumulate(spectrum);
      for (int k = 0; k <= config.k_max; ++k) {
        moments_by_k[k][s] = empirical_moment(spectrum, k);
      }
      trace_abs[s] = std::abs(pairwise_sum(spectrum.eigenvalues));
      const double sumsq = empirical_moment(spectrum, 2);
      const double coeff_sq = sample.sum_coeff_sq();
      sumsq_rel[s] = std::abs(sumsq - coeff_sq) / coeff_sq;
      if (config.keep_eigenvalues) {
        result.eigenvalues[s] = spectrum.eigenvalues;
      }
    }
  };

  if (workers <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  for (const auto& h : histograms) result.dos.merge(h);

  result.moments.resize(config.k_max + 1);
  std::vector<double> centered(samples);
  for (int k = 0; k <= config.k_max; ++k) {
    const auto& values = moments_by_k[k];
    const double mean = pairwise_sum(values) / samples;
    double std_error = 0.0;
    if (samples > 1) {
      for (int s = 0; s < samples; ++s) {
        const double d = values[s] - mean;
        centered[s] = d * d;
      }
      std_error = std::sqrt(pairwise_sum(centered) /
                            (static_cast<double>(samples) * (samples - 1)));
    }
    result.moments[k] = {mean, std_error};
  }

  const double trace_tolerance = 1e-9 * std::pow(2.0, 0.5 * n);
  for (int s = 0; s < samples; ++s) {
    result.max_trace_abs = std::max(result.max_trace_abs, trace_abs[s]);
    result.max_sumsq_rel_error =
        std::max(result.max_sumsq_rel_error, sumsq_rel[s]);
    if (trace_abs[s] > trace_tolerance || sumsq_rel[s] > 1e-9) {
      ++result.identity_violations;
    }
  }
  return result;
}

}  // namespace qsg
