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

#include "qsg/spectrum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

extern "C" {
void zheev_(const char* jobz, const char* uplo, const int* n,
            std::complex<double>* a, const int* lda, double* w,
            std::complex<double>* work, const int* lwork, double* rwork,
            int* info);
}

namespace qsg {

namespace {

constexpr double kHermitianTolerance = 1e-12;

void check_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigenvalues: matrix must be square");
  }
  const double deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > kHermitianTolerance) {
    throw std::invalid_argument(
        "eigenvalues: matrix is not Hermitian within 1e-12 (max |M - M^H| = " +
        std::to_string(deviation) + ")");
  }
}

std::vector<double> run_zheev(char jobz, Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> w(n);
  std::vector<double> rwork(std::max(1, 3 * n - 2));
  int lwork = -1;
  int info = 0;
  std::complex<double> work_query;
  zheev_(&jobz, "L", &n, a.data(), &n, w.data(), &work_query, &lwork,
         rwork.data(), &info);
  if (info != 0) throw std::runtime_error("zheev workspace query failed");
  lwork = static_cast<int>(work_query.real());
  std::vector<std::complex<double>> work(lwork);
  zheev_(&jobz, "L", &n, a.data(), &n, w.data(), work.data(), &lwork,
         rwork.data(), &info);
  if (info != 0) {
    throw std::runtime_error("zheev failed to converge, info = " +
                             std::to_string(info));
  }
  return w;  // ascending per LAPACK contract
}

}  // namespace

Spectrum eigenvalues_inplace(Eigen::MatrixXcd& m) {
  check_hermitian(m);
  const double frob = m.norm();
  Spectrum s;
  s.eigenvalues = run_zheev('N', m);
  s.residual_bound = std::numeric_limits<double>::epsilon() * frob *
                     static_cast<double>(m.rows());
  return s;
}

Spectrum eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd copy = m;
  return eigenvalues_inplace(copy);
}

EigenSystem eigensystem(const Eigen::MatrixXcd& m) {
  check_hermitian(m);
  EigenSystem sys;
  sys.vectors = m;
  sys.values = run_zheev('V', sys.vectors);
  return sys;
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double empirical_moment(const Spectrum& s, int k) {
  if (k < 0) throw std::invalid_argument("empirical_moment: k must be >= 0");
  if (k == 0) return 1.0;
  std::vector<double> powers(s.eigenvalues.size());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    powers[i] = std::pow(s.eigenvalues[i], k);
  }
  return pairwise_sum(powers) / static_cast<double>(powers.size());
}

}  // namespace qsg
