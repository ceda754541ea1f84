// Copyright 2026 The qpi-tools authors
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

#include "qpi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpi {

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions disagree (" + dims_str(a) +
                         " vs " + dims_str(b) + ")");
  }
  return a * b;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix dsum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

ApproxResult approx_eq(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return {false, std::numeric_limits<double>::infinity()};
  }
  double diff = 0.0;
  if (a.size() > 0) diff = (a - b).cwiseAbs().maxCoeff();
  return {diff <= tol, diff};
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const CMatrix gram = a.adjoint() * a;
  const Eigen::Index n = gram.rows();
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = Complex(1.0 + 0.25 * static_cast<double>(k % 7), 0.0);
  }
  v.normalize();
  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    CVector w = gram * v;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    const double next = std::real(v.dot(gram * v));
    const bool converged = std::abs(next - lambda) < 1e-12 * std::max(1.0, next);
    lambda = next;
    if (converged && iter > 0) break;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

bool spectral_norm_le_one(const CMatrix& a, double tol) {
  return spectral_norm(a) <= 1.0 + tol;
}

bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

std::string dims_str(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace qpi
