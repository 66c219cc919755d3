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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support/dense_oracle.hpp"

namespace qsg {
namespace {

using testing::dense_from_string;
using testing::pauli_matrix;

PauliString make(int n, std::vector<std::pair<int, int>> letters) {
  return PauliString::from_letters(n, letters);
}

TEST(PauliString, FromLettersSingleX) {
  const auto p = make(1, {{1, 1}});
  EXPECT_EQ(p.x_mask(), 1u);
  EXPECT_EQ(p.z_mask(), 0u);
  EXPECT_EQ(p.phase_exp(), 0u);
}

TEST(PauliString, FromLettersYIsIXZ) {
  const auto p = make(1, {{1, 2}});
  EXPECT_EQ(p.x_mask(), 1u);
  EXPECT_EQ(p.z_mask(), 1u);
  EXPECT_EQ(p.phase_exp(), 1u);
  // i * X * Z equals the Y matrix entrywise.
  const Eigen::Matrix2cd expected = pauli_matrix(2);
  EXPECT_LT((dense_from_string(p) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliString, FromLettersIdentityTensorZ) {
  const auto p = make(2, {{1, 0}, {2, 3}});
  EXPECT_EQ(p.x_mask(), 0u);
  EXPECT_EQ(p.z_mask(), 0b10u);
  EXPECT_EQ(p.phase_exp(), 0u);
}

TEST(PauliString, FromLettersRejectsDuplicateSite) {
  EXPECT_THROW(make(2, {{1, 1}, {1, 3}}), std::invalid_argument);
}

TEST(PauliString, FromLettersRejectsSiteOutOfRange) {
  EXPECT_THROW(make(2, {{3, 1}}), std::invalid_argument);
  EXPECT_THROW(make(2, {{0, 1}}), std::invalid_argument);
}

TEST(PauliString, MultiplyXYGivesIZ) {
  const auto x = make(1, {{1, 1}});
  const auto y = make(1, {{1, 2}});
  const auto xy = x * y;
  EXPECT_EQ(xy.x_mask(), 0u);
  EXPECT_EQ(xy.z_mask(), 1u);
  EXPECT_EQ(xy.phase_exp(), 1u);
  const Eigen::Matrix2cd expected = pauli_matrix(1) * pauli_matrix(2);
  EXPECT_LT((dense_from_string(xy) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliString, MultiplyYYGivesIdentity) {
  const auto y = make(1, {{1, 2}});
  EXPECT_TRUE((y * y).is_identity());
}

TEST(PauliString, SquareOfXYHasPhaseTwo) {
  // sigma1 sigma2 = i sigma3, so its square is -identity.
  const auto xy = make(1, {{1, 1}}) * make(1, {{1, 2}});
  const auto square = xy * xy;
  EXPECT_TRUE(square.has_identity_body());
  EXPECT_EQ(square.phase_exp(), 2u);
}

TEST(PauliString, MultiplyRejectsSiteCountMismatch) {
  EXPECT_THROW(make(1, {{1, 1}}) * make(2, {{1, 1}}), std::invalid_argument);
}

TEST(PauliString, MultiplyMatchesMatrixProductExhaustivelyOneSite) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto p = make(1, {{1, a}});
      const auto q = make(1, {{1, b}});
      const Eigen::MatrixXcd expected =
          dense_from_string(p) * dense_from_string(q);
      EXPECT_LT((dense_from_string(p * q) - expected).cwiseAbs().maxCoeff(),
                1e-15)
          << "a=" << a << " b=" << b;
    }
  }
}

TEST(PauliString, MultiplyMatchesMatrixProductRandomPairs) {
  std::mt19937 rng(20260811);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::pair<int, int>> lp, lq;
      for (int site = 1; site <= n; ++site) {
        lp.emplace_back(site, letter(rng));
        lq.emplace_back(site, letter(rng));
      }
      const auto p = make(n, lp);
      const auto q = make(n, lq);
      const Eigen::MatrixXcd expected =
          dense_from_string(p) * dense_from_string(q);
      EXPECT_LT((dense_from_string(p * q) - expected).cwiseAbs().maxCoeff(),
                1e-14);
    }
  }
}

TEST(PauliString, CommutationExamples) {
  const auto x1 = make(1, {{1, 1}});
  const auto z1 = make(1, {{1, 3}});
  EXPECT_FALSE(x1.commutes_with(z1));

  const auto x_id = make(2, {{1, 1}});
  const auto id_z = make(2, {{2, 3}});
  EXPECT_TRUE(x_id.commutes_with(id_z));

  const auto xx = make(2, {{1, 1}, {2, 1}});
  const auto zz = make(2, {{1, 3}, {2, 3}});
  EXPECT_TRUE(xx.commutes_with(zz));  // two anticommutations cancel
}

TEST(PauliString, CommutesIffProductsDifferByPhaseOffset) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> lp, lq;
    for (int site = 1; site <= 3; ++site) {
      lp.emplace_back(site, letter(rng));
      lq.emplace_back(site, letter(rng));
    }
    const auto p = make(3, lp);
    const auto q = make(3, lq);
    const auto pq = p * q;
    const auto qp = q * p;
    const unsigned offset = (pq.phase_exp() - qp.phase_exp()) & 3u;
    EXPECT_EQ(pq.x_mask(), qp.x_mask());
    EXPECT_EQ(pq.z_mask(), qp.z_mask());
    EXPECT_EQ(p.commutes_with(q), offset == 0u);
    if (!p.commutes_with(q)) EXPECT_EQ(offset, 2u);
  }
}

TEST(PauliString, NormalizedTraceExamples) {
  EXPECT_EQ(PauliString(3).normalized_trace(), TraceValue::unit(0));
  EXPECT_EQ(make(2, {{1, 1}}).normalized_trace(), TraceValue::zero());
  // sigma1 sigma2 sigma3 = i * identity.
  const auto chain = make(1, {{1, 1}}) * make(1, {{1, 2}}) * make(1, {{1, 3}});
  EXPECT_EQ(chain.normalized_trace(), TraceValue::unit(1));
}

TEST(PauliString, NormalizedTraceMatchesMatrixTraceExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    const int assignments = 1 << (2 * n);  // 4^n
    for (int code = 0; code < assignments; ++code) {
      std::vector<std::pair<int, int>> letters;
      int rest = code;
      for (int site = 1; site <= n; ++site) {
        letters.emplace_back(site, rest & 3);
        rest >>= 2;
      }
      const auto p = make(n, letters);
      const std::complex<double> direct =
          dense_from_string(p).trace() / double(1 << n);
      EXPECT_LT(std::abs(p.normalized_trace().to_complex() - direct), 1e-14);
    }
  }
}

TEST(PauliString, HermitianPhaseCondition) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> ls;
    for (int site = 1; site <= 4; ++site) ls.emplace_back(site, letter(rng));
    const auto p = make(4, ls);
    ASSERT_TRUE(p.is_hermitian());
    const Eigen::MatrixXcd m = dense_from_string(p);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    // An extra factor of i must break Hermiticity.
    const auto rotated =
        PauliString::from_masks(4, p.x_mask(), p.z_mask(), p.phase_exp() + 1);
    EXPECT_FALSE(rotated.is_hermitian());
  }
}

TEST(ChainTrace, Examples) {
  EXPECT_EQ(chain_trace(std::vector<int>{1, 1}), TraceValue::unit(0));
  EXPECT_EQ(chain_trace(std::vector<int>{1, 2}), TraceValue::zero());
  EXPECT_EQ(chain_trace(std::vector<int>{2, 3, 2, 3}), TraceValue::unit(2));
  EXPECT_EQ(chain_trace(std::vector<int>{1, 2, 3}), TraceValue::unit(1));
}

TEST(ChainTrace, RejectsBadLetters) {
  EXPECT_THROW(chain_trace(std::vector<int>{1, 4}), std::invalid_argument);
  EXPECT_THROW(chain_trace(std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(chain_trace(std::vector<int>{}), std::invalid_argument);
}

// Nonzero iff the numbers of 1s, 2s and 3s share one parity.
TEST(ChainTrace, ParityRuleExhaustive) {
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> letters(k, 1);
    bool more = true;
    while (more) {
      int counts[4] = {0, 0, 0, 0};
      for (int a : letters) ++counts[a];
      const bool parities_coincide = (counts[1] % 2 == counts[2] % 2) &&
                                     (counts[2] % 2 == counts[3] % 2);
      EXPECT_EQ(!chain_trace(letters).is_zero, parities_coincide);
      int pos = k - 1;
      while (pos >= 0 && letters[pos] == 3) {
        letters[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        more = false;
      } else {
        ++letters[pos];
      }
    }
  }
}

// sigma(a_1..a_k) = sum_{j>=2} delta_{a_1 a_j} (-1)^j sigma(a with 1, j removed).
TEST(ChainTrace, EvenLengthRecursion) {
  for (int k = 4; k <= 8; k += 2) {
    std::vector<int> letters(k, 1);
    bool more = true;
    while (more) {
      std::complex<double> rhs = 0.0;
      for (int j = 2; j <= k; ++j) {
        if (letters[0] != letters[j - 1]) continue;
        std::vector<int> reduced;
        for (int i = 1; i < k; ++i) {
          if (i != j - 1) reduced.push_back(letters[i]);
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        rhs += sign * chain_trace(reduced).to_complex();
      }
      EXPECT_LT(std::abs(chain_trace(letters).to_complex() - rhs), 1e-15);
      int pos = k - 1;
      while (pos >= 0 && letters[pos] == 3) {
        letters[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        more = false;
      } else {
        ++letters[pos];
      }
    }
  }
}

TEST(PauliString, StrRendering) {
  EXPECT_EQ(make(3, {{1, 1}, {3, 3}}).str(), "+ X_Z");
  const auto iz = make(1, {{1, 1}}) * make(1, {{1, 2}});
  EXPECT_EQ(iz.str(), "i Z");
  // Hermitian strings render without a leftover phase.
  EXPECT_EQ(make(2, {{1, 1}, {2, 2}}).str(), "+ XY");
  EXPECT_EQ(make(1, {{1, 2}}).str(), "+ Y");
}

}  // namespace
}  // namespace qsg
