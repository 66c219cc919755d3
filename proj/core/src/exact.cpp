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

#include "qsg/exact.hpp"

#include <stdexcept>

namespace qsg {

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is an integer at every step
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial(int n) {
  if (n < -1) {
    throw std::invalid_argument("double_factorial: n must be >= -1");
  }
  BigInt result = 1;
  for (int i = n; i > 1; i -= 2) result *= i;
  return result;
}

BigInt catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: m must be non-negative");
  return binomial(2 * m, m) / (m + 1);
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRational& v) { return v.convert_to<double>(); }

}  // namespace qsg
