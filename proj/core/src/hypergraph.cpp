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

#include "qsg/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsg/exact.hpp"

namespace qsg {

namespace {

bool edges_intersect(const Hyperedge& a, const Hyperedge& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a == *it_b) return true;
    if (*it_a < *it_b) {
      ++it_a;
    } else {
      ++it_b;
    }
  }
  return false;
}

}  // namespace

Hypergraph::Hypergraph(int n_vertices, std::vector<Hyperedge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 1) {
    throw std::invalid_argument("Hypergraph: n_vertices must be positive");
  }
  for (const auto& e : edges_) {
    if (e.empty()) {
      throw std::invalid_argument("Hypergraph: empty hyperedge");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n_vertices_) {
        throw std::invalid_argument("Hypergraph: vertex index out of range");
      }
      if (i > 0 && e[i] <= e[i - 1]) {
        throw std::invalid_argument(
            "Hypergraph: hyperedge vertices must be strictly increasing");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("Hypergraph: duplicate hyperedge");
  }
}

int Hypergraph::max_vertex_degree() const {
  std::vector<int> degree(n_vertices_ + 1, 0);
  for (const auto& e : edges_) {
    for (int v : e) ++degree[v];
  }
  return *std::max_element(degree.begin(), degree.end());
}

int Hypergraph::max_hyperedge_degree() const {
  const int m = edge_count();
  std::vector<int> degree(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (edges_intersect(edges_[i], edges_[j])) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  return m == 0 ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::uint64_t Hypergraph::count_disjoint_edge_tuples(int j) const {
  if (j < 1) throw std::invalid_argument("count_disjoint_edge_tuples: j >= 1");
  const int m = edge_count();
  std::vector<char> used(n_vertices_ + 1, 0);
  std::uint64_t count = 0;
  // Depth-first over increasing edge indices, pruning on vertex overlap.
  auto recurse = [&](auto&& self, int first, int remaining) -> void {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int i = first; i <= m - remaining; ++i) {
      const auto& e = edges_[i];
      bool free = true;
      for (int v : e) {
        if (used[v]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      for (int v : e) used[v] = 1;
      self(self, i + 1, remaining - 1);
      for (int v : e) used[v] = 0;
    }
  };
  recurse(recurse, 0, j);
  return count;
}

std::optional<int> Hypergraph::uniform_edge_size() const {
  if (edges_.empty()) return std::nullopt;
  const auto size = edges_.front().size();
  for (const auto& e : edges_) {
    if (e.size() != size) return std::nullopt;
  }
  return static_cast<int>(size);
}

Hypergraph Hypergraph::cycle_chain(int n) {
  if (n < 3) throw std::invalid_argument("cycle_chain: n must be >= 3");
  std::vector<Hyperedge> edges;
  edges.reserve(n);
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});  // sigma_{n+1} = sigma_1
  return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::complete_graph(int n) { return complete_p_uniform(n, 2); }

Hypergraph Hypergraph::star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: n must be >= 2");
  std::vector<Hyperedge> edges;
  edges.reserve(n - 1);
  for (int j = 2; j <= n; ++j) edges.push_back({1, j});
  return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::complete_p_uniform(int n, int p) {
  if (n < 1 || p < 1 || p > n) {
    throw std::invalid_argument("complete_p_uniform: need 1 <= p <= n");
  }
  std::vector<Hyperedge> edges;
  Hyperedge current(p);
  auto recurse = [&](auto&& self, int pos, int next) -> void {
    if (pos == p) {
      edges.push_back(current);
      return;
    }
    for (int v = next; v <= n - (p - pos - 1); ++v) {
      current[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  recurse(recurse, 0, 1);
  return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw std::invalid_argument("circulant: n must be >= 3");
  std::set<int> seen;
  for (int d : offsets) {
    if (d < 1 || 2 * d > n) {
      throw std::invalid_argument("circulant: offsets must lie in [1, n/2]");
    }
    if (!seen.insert(d).second) {
      throw std::invalid_argument("circulant: duplicate offset");
    }
  }
  std::set<Hyperedge> edges;
  for (int d : offsets) {
    for (int i = 1; i <= n; ++i) {
      int j = (i - 1 + d) % n + 1;
      if (i == j) continue;
      edges.insert({std::min(i, j), std::max(i, j)});
    }
  }
  return Hypergraph(n, {edges.begin(), edges.end()});
}

Hypergraph Hypergraph::read(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "n" || !(in >> n)) {
    throw std::runtime_error("Hypergraph: header must be \"n <int>\"");
  }
  std::string line;
  std::getline(in, line);  // consume rest of header line
  std::vector<Hyperedge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Hyperedge e;
    int v;
    while (ls >> v) e.push_back(v);
    if (!ls.eof()) {
      throw std::runtime_error("Hypergraph: malformed edge line: " + line);
    }
    if (!e.empty()) edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

void Hypergraph::write(std::ostream& out) const {
  out << "n " << n_vertices_ << '\n';
  for (const auto& e : edges_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

std::vector<double> overlap_pmf(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0 || a > n || b > n) {
    throw std::invalid_argument("overlap_pmf: need 0 <= a,b <= n");
  }
  const BigInt denom = binomial(n, b);
  std::vector<double> pmf(std::min(a, b) + 1, 0.0);
  for (int k = 0; k < static_cast<int>(pmf.size()); ++k) {
    const BigInt num = binomial(a, k) * binomial(n - a, b - k);
    pmf[k] = to_double(BigRational(num, denom));
  }
  return pmf;
}

double overlap_nonempty_fraction(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0 || a > n || b > n) {
    throw std::invalid_argument("overlap_nonempty_fraction: need 0 <= a,b <= n");
  }
  return 1.0 - to_double(BigRational(binomial(n - a, b), binomial(n, b)));
}

}  // namespace qsg
