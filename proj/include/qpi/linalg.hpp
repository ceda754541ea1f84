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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qpi {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class TypeCheckError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

struct ApproxResult {
  bool equal = false;
  double max_abs_diff = 0.0;
  explicit operator bool() const { return equal; }
};

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

// Matrix product with an explicit shape check (Eigen only asserts in debug).
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Kronecker product; the left factor indexes the most significant digit, so
// basis state |i>|k> of A (x) B sits at index i*rows(B)+k. Zero-sized
// operands are allowed and yield zero-sized results.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Block-diagonal direct sum: `a` in the upper-left block, `b` lower-right.
CMatrix dsum(const CMatrix& a, const CMatrix& b);

// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

// Entrywise comparison. Shape mismatch compares unequal with an infinite
// reported difference.
ApproxResult approx_eq(const CMatrix& a, const CMatrix& b, double tol);

// Largest singular value, computed by power iteration on a†a (up to 200
// iterations, early exit when the Rayleigh quotient moves < 1e-12).
double spectral_norm(const CMatrix& a);

bool spectral_norm_le_one(const CMatrix& a, double tol);

bool all_finite(const CMatrix& a);

std::string dims_str(const CMatrix& a);

}  // namespace qpi
