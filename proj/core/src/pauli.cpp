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

#include "qsg/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qsg {

namespace {

constexpr std::complex<double> kPowersOfI[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void check_site_count(int n_sites) {
  if (n_sites < 1 || n_sites > PauliString::kMaxSites) {
    throw std::invalid_argument("PauliString: n_sites must be in [1, 64]");
  }
}

}  // namespace

std::complex<double> TraceValue::to_complex() const {
  return is_zero ? std::complex<double>(0.0, 0.0) : kPowersOfI[phase & 3u];
}

PauliString::PauliString(int n_sites) : n_sites_(n_sites) {
  check_site_count(n_sites);
}

PauliString PauliString::from_letters(
    int n_sites, std::span<const std::pair<int, int>> letters) {
  check_site_count(n_sites);
  std::uint64_t x = 0, z = 0, seen = 0;
  unsigned phase = 0;
  for (const auto& [site, a] : letters) {
    if (site < 1 || site > n_sites) {
      throw std::invalid_argument("PauliString: site index out of range");
    }
    if (a < 0 || a > 3) {
      throw std::invalid_argument("PauliString: letter must be in {0,1,2,3}");
    }
    const std::uint64_t bit = std::uint64_t{1} << (site - 1);
    if (seen & bit) {
      throw std::invalid_argument("PauliString: duplicate site");
    }
    seen |= bit;
    if (a == 1 || a == 2) x |= bit;
    if (a == 3 || a == 2) z |= bit;
    if (a == 2) ++phase;  // Y = i X Z
  }
  return PauliString(n_sites, x, z, static_cast<std::uint8_t>(phase & 3u));
}

PauliString PauliString::from_masks(int n_sites, std::uint64_t x_mask,
                                    std::uint64_t z_mask, unsigned phase_exp) {
  check_site_count(n_sites);
  const std::uint64_t valid =
      n_sites == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_sites) - 1;
  if ((x_mask & ~valid) || (z_mask & ~valid)) {
    throw std::invalid_argument("PauliString: mask bits beyond n_sites");
  }
  return PauliString(n_sites, x_mask, z_mask,
                     static_cast<std::uint8_t>(phase_exp & 3u));
}

bool PauliString::is_hermitian() const {
  return phase_ == (std::popcount(x_ & z_) & 3);
}

int PauliString::letter(int site) const {
  if (site < 1 || site > n_sites_) {
    throw std::invalid_argument("PauliString: site index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << (site - 1);
  const bool x = x_ & bit, z = z_ & bit;
  if (x && z) return 2;
  if (x) return 1;
  if (z) return 3;
  return 0;
}

std::string PauliString::str() const {
  static const char* kPhase[4] = {"+", "i", "-", "-i"};
  // A Y letter already carries its i factor, so the displayed prefix is the
  // phase left over after rendering letters.
  const unsigned display =
      (phase_ - static_cast<unsigned>(std::popcount(x_ & z_))) & 3u;
  std::string out = kPhase[display];
  out += ' ';
  for (int site = 1; site <= n_sites_; ++site) {
    out += "_XYZ"[letter(site)];
  }
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (n_sites_ != rhs.n_sites_) {
    throw std::invalid_argument("PauliString: site-count mismatch");
  }
  // Moving the Z part of the left factor through the X part of the right
  // factor flips a sign per overlapping site: Z X = - X Z.
  const unsigned swaps = std::popcount(z_ & rhs.x_);
  phase_ = static_cast<std::uint8_t>((phase_ + rhs.phase_ + 2 * swaps) & 3u);
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_sites_ != other.n_sites_) {
    throw std::invalid_argument("PauliString: site-count mismatch");
  }
  const unsigned form =
      std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (form & 1u) == 0;
}

TraceValue PauliString::normalized_trace() const {
  if (x_ != 0 || z_ != 0) return TraceValue::zero();
  return TraceValue::unit(phase_);
}

TraceValue chain_trace(std::span<const int> letters) {
  if (letters.empty()) {
    throw std::invalid_argument("chain_trace: empty letter sequence");
  }
  PauliString acc(1);
  for (int a : letters) {
    if (a < 1 || a > 3) {
      throw std::invalid_argument("chain_trace: letter must be in {1,2,3}");
    }
    const std::pair<int, int> single[] = {{1, a}};
    acc *= PauliString::from_letters(1, single);
  }
  return acc.normalized_trace();
}

}  // namespace qsg
