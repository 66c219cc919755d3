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

#include <boost/multiprecision/cpp_int.hpp>

namespace qsg {

// Exact integer/rational arithmetic for the combinatorial identities; plain
// 64-bit overflows already at moderate binomials, e.g. C(68,34).
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// n!! with the conventions (-1)!! = 0!! = 1.
BigInt double_factorial(int n);

/// Catalan number C(2m, m) / (m + 1).
BigInt catalan(int m);

double to_double(const BigInt& v);
double to_double(const BigRational& v);

}  // namespace qsg
