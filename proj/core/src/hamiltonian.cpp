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

#include "qsg/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsg {

namespace {

constexpr std::complex<double> kPowersOfI[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

HamiltonianSample HamiltonianSample::draw(const Hypergraph& graph,
                                          const CouplingDistribution& dist,
                                          std::uint64_t seed,
                                          std::uint64_t sample_index) {
  if (graph.n_vertices() > PauliString::kMaxSites) {
    throw std::invalid_argument("HamiltonianSample: more than 64 sites");
  }
  if (graph.edge_count() == 0) {
    throw std::invalid_argument("HamiltonianSample: graph has no edges");
  }
  HamiltonianSample sample(graph, seed, sample_index);
  const CounterRng rng(seed, sample_index);
  const double inv_sqrt_edges = 1.0 / std::sqrt(double(graph.edge_count()));

  std::uint64_t term_index = 0;
  std::vector<std::pair<int, int>> letters;
  for (const auto& edge : graph.edges()) {
    const int size = static_cast<int>(edge.size());
    const double norm = inv_sqrt_edges / std::pow(3.0, 0.5 * size);
    letters.assign(edge.size(), {0, 0});
    // Letter tuples in lexicographic order; digit i addresses edge vertex i.
    std::vector<int> digits(edge.size(), 1);
    bool more = true;
    while (more) {
      for (std::size_t i = 0; i < edge.size(); ++i) {
        letters[i] = {edge[i], digits[i]};
      }
      const double alpha = dist.sample(rng, term_index);
      sample.terms_.push_back(
          {alpha * norm,
           PauliString::from_letters(graph.n_vertices(), letters)});
      ++term_index;
      int pos = static_cast<int>(edge.size()) - 1;
      while (pos >= 0 && digits[pos] == 3) {
        digits[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        more = false;
      } else {
        ++digits[pos];
      }
    }
  }
  return sample;
}

double HamiltonianSample::sum_coeff_sq() const {
  double total = 0.0;
  for (const auto& term : terms_) total += term.coefficient * term.coefficient;
  return total;
}

Eigen::MatrixXcd HamiltonianSample::to_dense(int max_sites) const {
  const int n = n_sites();
  if (n > max_sites) {
    const double bytes = 16.0 * std::pow(4.0, n);
    std::ostringstream msg;
    msg << "to_dense: " << n << " sites exceeds the cap of " << max_sites
        << " (matrix would need ~" << bytes / (1024.0 * 1024.0 * 1024.0)
        << " GiB)";
    throw std::runtime_error(msg.str());
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [coeff, str] : terms_) {
    const std::uint64_t x = str.x_mask();
    const std::uint64_t z = str.z_mask();
    const std::complex<double> base = coeff * kPowersOfI[str.phase_exp()];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const double sign = (std::popcount(z & col) & 1) ? -1.0 : 1.0;
      m(col ^ x, col) += sign * base;
    }
  }
  return m;
}

void HamiltonianSample::apply(std::span<const std::complex<double>> in,
                              std::span<std::complex<double>> out) const {
  const std::uint64_t dim = std::uint64_t{1} << n_sites();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("apply: vector length must equal 2^n");
  }
  std::fill(out.begin(), out.end(), std::complex<double>(0.0, 0.0));
  for (const auto& [coeff, str] : terms_) {
    const std::uint64_t x = str.x_mask();
    const std::uint64_t z = str.z_mask();
    const std::complex<double> base = coeff * kPowersOfI[str.phase_exp()];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const double sign = (std::popcount(z & col) & 1) ? -1.0 : 1.0;
      out[col ^ x] += sign * base * in[col];
    }
  }
}

Eigen::VectorXcd HamiltonianSample::apply(const Eigen::VectorXcd& in) const {
  Eigen::VectorXcd out(in.size());
  apply({in.data(), static_cast<std::size_t>(in.size())},
        {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

}  // namespace qsg
