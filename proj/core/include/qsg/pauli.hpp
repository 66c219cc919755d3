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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace qsg {

/// Exact value of a normalised Pauli trace: either 0 or i^phase with
/// phase in {0,1,2,3}. Kept in integer form so that combinatorial sums over
/// traces stay exact.
struct TraceValue {
  bool is_zero = true;
  std::uint8_t phase = 0;  // meaningful only when !is_zero

  static constexpr TraceValue zero() { return {true, 0}; }
  static constexpr TraceValue unit(unsigned phase) {
    return {false, static_cast<std::uint8_t>(phase & 3u)};
  }

  std::complex<double> to_complex() const;

  bool operator==(const TraceValue&) const = default;
};

/// A signed tensor product of single-site Pauli operators on up to 64 sites,
/// encoded as two bitmasks plus a power of i:
///
///   P = i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}
///
/// with the convention Y = i X Z, so a Y factor on site j sets both mask bits
/// and increments phase_exp. Site 1 maps to the least significant bit.
/// Values are immutable after construction and freely shareable.
class PauliString {
 public:
  static constexpr int kMaxSites = 64;

  /// Identity string on `n_sites` sites.
  explicit PauliString(int n_sites);

  /// Builds a string from (site, letter) pairs with 1-based sites and letters
  /// in {0,1,2,3} = {I,X,Y,Z}. Sites must be distinct and within range.
  static PauliString from_letters(int n_sites,
                                  std::span<const std::pair<int, int>> letters);

  /// Direct construction from the encoded representation.
  static PauliString from_masks(int n_sites, std::uint64_t x_mask,
                                std::uint64_t z_mask, unsigned phase_exp);

  int n_sites() const { return n_sites_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  unsigned phase_exp() const { return phase_; }

  /// True when the operator part is the identity (any phase).
  bool has_identity_body() const { return x_ == 0 && z_ == 0; }
  bool is_identity() const { return has_identity_body() && phase_ == 0; }

  /// Hermitian iff phase_exp == popcount(x & z) (mod 4); holds by
  /// construction for strings built from letters without extra phases.
  bool is_hermitian() const;

  /// Letter in {0,1,2,3} acting on the given 1-based site.
  int letter(int site) const;

  /// Human readable form such as "-i XY_Z" (site 1 first).
  std::string str() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// True iff the symplectic form popcount(x1&z2) + popcount(z1&x2) is even.
  bool commutes_with(const PauliString& other) const;

  /// 2^{-n} Tr P: i^phase_exp when the operator part is the identity, else 0.
  TraceValue normalized_trace() const;

  bool operator==(const PauliString&) const = default;

 private:
  PauliString(int n_sites, std::uint64_t x, std::uint64_t z, std::uint8_t phase)
      : x_(x), z_(z), n_sites_(n_sites), phase_(phase) {}

  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int n_sites_ = 0;
  std::uint8_t phase_ = 0;
};

/// Normalised trace of a product of single-site Pauli matrices,
/// (1/2) Tr sigma^{(a_1)} ... sigma^{(a_k)} for letters a_i in {1,2,3}.
TraceValue chain_trace(std::span<const int> letters);

}  // namespace qsg
