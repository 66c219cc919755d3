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

#include "qsg/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsg {

EmpiricalDOS::EmpiricalDOS(std::vector<double> bin_edges,
                           std::uint64_t n_eigen_per_sample)
    : edges_(std::move(bin_edges)),
      n_eigen_per_sample_(n_eigen_per_sample) {
  if (edges_.size() < 2) {
    throw std::invalid_argument("EmpiricalDOS: need at least two bin edges");
  }
  if (!std::is_sorted(edges_.begin(), edges_.end()) ||
      std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument(
        "EmpiricalDOS: bin edges must be strictly increasing");
  }
  counts_.assign(edges_.size() - 1, 0);
}

EmpiricalDOS EmpiricalDOS::uniform_bins(double lo, double hi, int bins,
                                        std::uint64_t n_eigen_per_sample) {
  if (bins < 1 || !(hi > lo)) {
    throw std::invalid_argument("EmpiricalDOS: invalid uniform binning");
  }
  std::vector<double> edges(bins + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) edges[i] = lo + width * i;
  edges.back() = hi;
  return EmpiricalDOS(std::move(edges), n_eigen_per_sample);
}

void EmpiricalDOS::accumulate(const Spectrum& s) {
  if (s.eigenvalues.size() != n_eigen_per_sample_) {
    throw std::invalid_argument("EmpiricalDOS: spectrum size mismatch");
  }
  for (double lambda : s.eigenvalues) {
    if (lambda < edges_.front()) {
      ++below_;
    } else if (lambda >= edges_.back()) {
      ++above_;
    } else {
      const auto it = std::upper_bound(edges_.begin(), edges_.end(), lambda);
      ++counts_[static_cast<std::size_t>(it - edges_.begin()) - 1];
    }
  }
  ++n_samples_;
}

void EmpiricalDOS::merge(const EmpiricalDOS& other) {
  if (other.edges_ != edges_ ||
      other.n_eigen_per_sample_ != n_eigen_per_sample_) {
    throw std::invalid_argument("EmpiricalDOS: binning mismatch on merge");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  below_ += other.below_;
  above_ += other.above_;
  n_samples_ += other.n_samples_;
}

double EmpiricalDOS::empirical_cdf(int edge_index) const {
  if (edge_index < 0 || edge_index >= static_cast<int>(edges_.size())) {
    throw std::invalid_argument("EmpiricalDOS: edge index out of range");
  }
  std::uint64_t mass = below_;
  for (int i = 0; i < edge_index; ++i) mass += counts_[i];
  return static_cast<double>(mass) / static_cast<double>(total_mass());
}

double EmpiricalDOS::density_estimate(int bin) const {
  if (bin < 0 || bin >= bin_count()) {
    throw std::invalid_argument("EmpiricalDOS: bin index out of range");
  }
  const double width = edges_[bin + 1] - edges_[bin];
  return static_cast<double>(counts_[bin]) /
         (static_cast<double>(total_mass()) * width);
}

double ks_distance(const EmpiricalDOS& dos, const LimitLaw& law) {
  if (dos.total_mass() == 0) {
    throw std::invalid_argument("ks_distance: empty histogram");
  }
  double sup = 0.0;
  std::uint64_t mass = dos.below();
  const auto& edges = dos.bin_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) mass += dos.counts()[i - 1];
    const double empirical =
        static_cast<double>(mass) / static_cast<double>(dos.total_mass());
    sup = std::max(sup, std::abs(empirical - law.cdf(edges[i])));
  }
  return sup;
}

std::vector<double> default_bin_edges(const LimitLaw& law, int bins) {
  double lo = -4.0, hi = 4.0;
  if (const auto support = law.support()) {
    lo = support->first - 0.5;
    hi = support->second + 0.5;
  }
  return EmpiricalDOS::uniform_bins(lo, hi, bins, 1).bin_edges();
}

}  // namespace qsg
