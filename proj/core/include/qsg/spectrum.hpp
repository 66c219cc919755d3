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
#include <span>
#include <vector>

namespace qsg {

/// Full eigenvalue list of one Hermitian sample, sorted ascending.
/// residual_bound is the backward-error scale of the solver,
/// eps * ||M||_F * dim, certifying |lambda_computed - lambda| below it.
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual_bound = 0.0;
};

/// All eigenvalues of a Hermitian matrix. The input must be Hermitian within
/// 1e-12 entrywise; the solver reduces to tridiagonal form and iterates with
/// implicit shifts (delegated to LAPACK zheev).
Spectrum eigenvalues(const Eigen::MatrixXcd& m);

/// Destructive variant for large matrices: the argument buffer is consumed
/// in place (no second copy is allocated).
Spectrum eigenvalues_inplace(Eigen::MatrixXcd& m);

/// Eigenvalues plus eigenvectors (columns); used for residual spot checks.
struct EigenSystem {
  std::vector<double> values;
  Eigen::MatrixXcd vectors;
};
EigenSystem eigensystem(const Eigen::MatrixXcd& m);

/// 2^{-n} sum of lambda^k (pairwise summation).
double empirical_moment(const Spectrum& s, int k);

/// Deterministic pairwise sum, independent of accumulation threading.
double pairwise_sum(std::span<const double> values);

}  // namespace qsg
