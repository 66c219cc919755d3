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

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qsg/coupling.hpp"
#include "qsg/hypergraph.hpp"
#include "qsg/pauli.hpp"

namespace qsg {

struct HamiltonianTerm {
  double coefficient;
  PauliString string;
};

/// One random draw of the model: per hyperedge e and letter tuple
/// a in {1,2,3}^{|e|}, a term alpha * e(G)^{-1/2} 3^{-|e|/2} * sigma_(a,e).
/// The coupling alpha is read off a counter stream keyed by
/// (seed, sample_index, flat term index), so a draw is a pure function of
/// its arguments and bit-reproducible under any parallel schedule.
class HamiltonianSample {
 public:
  /// Dense materialisation refuses above this site count by default
  /// (dimension 16384, ~4.3 GiB for the matrix alone).
  static constexpr int kDefaultDenseSiteCap = 14;

  static HamiltonianSample draw(const Hypergraph& graph,
                                const CouplingDistribution& dist,
                                std::uint64_t seed, std::uint64_t sample_index);

  const Hypergraph& graph() const { return graph_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }
  int n_sites() const { return graph_.n_vertices(); }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t sample_index() const { return sample_index_; }

  /// Sum of squared coefficients; equals 2^{-n} Tr H^2 exactly up to
  /// summation order (distinct Pauli strings are trace-orthogonal).
  double sum_coeff_sq() const;

  /// Dense Hermitian matrix of dimension 2^n. Exactly Hermitian entrywise.
  /// Throws when n_sites exceeds the cap; the message carries the memory
  /// estimate for the refused allocation.
  Eigen::MatrixXcd to_dense(int max_sites = kDefaultDenseSiteCap) const;

  /// Matrix-free action out = H * in. Lengths must equal 2^n.
  void apply(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

 private:
  HamiltonianSample(Hypergraph graph, std::uint64_t seed,
                    std::uint64_t sample_index)
      : graph_(std::move(graph)), seed_(seed), sample_index_(sample_index) {}

  Hypergraph graph_;
  std::uint64_t seed_;
  std::uint64_t sample_index_;
  std::vector<HamiltonianTerm> terms_;
};

}  // namespace qsg
