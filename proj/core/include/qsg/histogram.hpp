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

#include "qsg/limit_laws.hpp"
#include "qsg/spectrum.hpp"

namespace qsg {

/// Pooled eigenvalue histogram over Monte Carlo samples. Out-of-range
/// eigenvalues are tallied below/above, never silently dropped.
class EmpiricalDOS {
 public:
  EmpiricalDOS(std::vector<double> bin_edges, std::uint64_t n_eigen_per_sample);

  static EmpiricalDOS uniform_bins(double lo, double hi, int bins,
                                   std::uint64_t n_eigen_per_sample);

  const std::vector<double>& bin_edges() const { return edges_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  int bin_count() const { return static_cast<int>(counts_.size()); }
  std::uint64_t below() const { return below_; }
  std::uint64_t above() const { return above_; }
  std::uint64_t n_samples() const { return n_samples_; }
  std::uint64_t n_eigen_per_sample() const { return n_eigen_per_sample_; }
  std::uint64_t total_mass() const { return n_samples_ * n_eigen_per_sample_; }

  void accumulate(const Spectrum& s);

  /// Merges a histogram with identical binning; associative and commutative.
  void merge(const EmpiricalDOS& other);

  /// Empirical CDF evaluated at bin edge `edge_index` (0..bins).
  double empirical_cdf(int edge_index) const;

  /// counts / (total_mass * bin_width).
  double density_estimate(int bin) const;

 private:
  std::vector<double> edges_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t below_ = 0;
  std::uint64_t above_ = 0;
  std::uint64_t n_samples_ = 0;
  std::uint64_t n_eigen_per_sample_;
};

/// sup over bin edges of |empirical CDF - law CDF|; lies in [0,1].
double ks_distance(const EmpiricalDOS& dos, const LimitLaw& law);

/// Default binning: [-4,4] for full-line laws, [-R-0.5, R+0.5] for compact
/// supports. `bins` defaults to 101.
std::vector<double> default_bin_edges(const LimitLaw& law, int bins = 101);

}  // namespace qsg
