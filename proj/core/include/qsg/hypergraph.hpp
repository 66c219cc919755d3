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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsg {

/// A hyperedge is a strictly increasing sequence of 1-based vertex indices.
using Hyperedge = std::vector<int>;

/// Vertex count plus a canonical (lexicographically sorted) list of pairwise
/// distinct hyperedges. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(int n_vertices, std::vector<Hyperedge> edges);

  int n_vertices() const { return n_vertices_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Maximum over vertices of the number of incident hyperedges.
  int max_vertex_degree() const;

  /// Maximum over edges of the number of *other* edges sharing at least one
  /// vertex (vertex degree in the line graph; the edge itself is excluded).
  int max_hyperedge_degree() const;

  /// Exact count of unordered j-tuples of pairwise vertex-disjoint edges.
  std::uint64_t count_disjoint_edge_tuples(int j) const;

  /// Common edge size when the hypergraph is uniform, nullopt otherwise.
  std::optional<int> uniform_edge_size() const;

  // Generators. Edge lists come out in canonical sorted order.
  static Hypergraph cycle_chain(int n);      // closed chain, wraparound (1,n)
  static Hypergraph complete_graph(int n);   // all 2-subsets
  static Hypergraph star_graph(int n);       // vertex 1 joined to 2..n
  static Hypergraph complete_p_uniform(int n, int p);  // all p-subsets
  static Hypergraph circulant(int n, const std::vector<int>& offsets);

  // Text format: first line "n <int>", then one edge per line as
  // space-separated vertex indices.
  static Hypergraph read(std::istream& in);
  void write(std::ostream& out) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_vertices_;
  std::vector<Hyperedge> edges_;
};

/// Hypergeometric pmf of the intersection size |A ∩ B| for fixed |A| = a and
/// uniformly random |B| = b over an n-set: p(k) = C(a,k) C(n-a,b-k) / C(n,b),
/// returned for k = 0..min(a,b).
std::vector<double> overlap_pmf(int n, int a, int b);

/// Probability that the intersection is nonempty: 1 - C(n-a,b) / C(n,b).
double overlap_nonempty_fraction(int n, int a, int b);

}  // namespace qsg
