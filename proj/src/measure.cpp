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

#include "qpi/measure.hpp"

#include <Eigen/Eigenvalues>

#include "qpi/corpus.hpp"
#include "qpi/states.hpp"

namespace qpi {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-8;

void validate_density(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw ContractError("density matrix must be square, got " + dims_str(m));
  if (!all_finite(m)) throw ContractError("density matrix has non-finite entries");
  if (m.size() == 0) throw ContractError("density matrix must be nonempty");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw ContractError("density matrix is not Hermitian");
  const double tr = m.trace().real();
  if (tr < -kTraceTol || tr > 1.0 + kTraceTol)
    throw ContractError("density matrix trace outside [0,1]: " +
                        std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw ContractError("density matrix is not positive semidefinite");
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix mat) : mat_(std::move(mat)) {
  validate_density(mat_);
}

DensityMatrix DensityMatrix::basis_state(Eigen::Index dim,
                                         Eigen::Index index) {
  if (index < 0 || index >= dim)
    throw ContractError("basis_state: index out of range");
  CMatrix m = CMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const CMatrix& column) {
  if (column.cols() != 1) throw ContractError("pure: expected a column");
  return DensityMatrix(column * column.adjoint());
}

double DensityMatrix::trace_real() const { return mat_.trace().real(); }

KrausMap::KrausMap(Eigen::Index in_dim, Eigen::Index out_dim,
                   std::vector<CMatrix> kraus)
    : in_(in_dim), out_(out_dim), ks_(std::move(kraus)) {
  if (ks_.empty()) throw ContractError("KrausMap: empty Kraus set");
  CMatrix total = CMatrix::Zero(in_, in_);
  for (const CMatrix& k : ks_) {
    if (k.rows() != out_ || k.cols() != in_)
      throw DimensionError("KrausMap: operator shape " + dims_str(k) +
                           " does not match " + std::to_string(out_) + "x" +
                           std::to_string(in_));
    total += k.adjoint() * k;
  }
  // Trace-nonincreasing: sum K†K <= I.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(total, Eigen::EigenvaluesOnly);
  if (in_ > 0 && es.eigenvalues().maxCoeff() > 1.0 + kPsdTol)
    throw ContractError("KrausMap: channel increases trace");
}

KrausMap lift_contraction(const CMatrix& c) {
  if (!spectral_norm_le_one(c, 1e-9))
    throw ContractError("lift_contraction: spectral norm exceeds 1");
  return KrausMap(c.cols(), c.rows(), {c});
}

KrausMap identity_channel(Eigen::Index dim) {
  return KrausMap(dim, dim, {identity(dim)});
}

KrausMap discard(Eigen::Index dim) {
  if (dim < 1) throw ContractError("discard: dimension must be >= 1");
  std::vector<CMatrix> ks;
  ks.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    CMatrix bra = CMatrix::Zero(1, dim);
    bra(0, i) = 1.0;
    ks.push_back(std::move(bra));
  }
  return KrausMap(dim, 1, std::move(ks));
}

KrausMap discard(const TypeExpr& b) { return discard(b.dim()); }

KrausMap fst(Eigen::Index d1, Eigen::Index d2) {
  if (d2 < 1) throw ContractError("fst: discarded factor must be inhabited");
  std::vector<CMatrix> ks;
  ks.reserve(d2);
  const CMatrix eye = identity(d1);
  for (Eigen::Index j = 0; j < d2; ++j) {
    CMatrix bra = CMatrix::Zero(1, d2);
    bra(0, j) = 1.0;
    ks.push_back(kron(eye, bra));
  }
  return KrausMap(d1 * d2, d1, std::move(ks));
}

KrausMap snd(Eigen::Index d1, Eigen::Index d2) {
  if (d1 < 1) throw ContractError("snd: discarded factor must be inhabited");
  std::vector<CMatrix> ks;
  ks.reserve(d1);
  const CMatrix eye = identity(d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    CMatrix bra = CMatrix::Zero(1, d1);
    bra(0, i) = 1.0;
    ks.push_back(kron(bra, eye));
  }
  return KrausMap(d1 * d2, d2, std::move(ks));
}

KrausMap fst(const TypeExpr& b1, const TypeExpr& b2) {
  return fst(b1.dim(), b2.dim());
}

KrausMap snd(const TypeExpr& b1, const TypeExpr& b2) {
  return snd(b1.dim(), b2.dim());
}

KrausMap measure_z() {
  static const CMatrix copy_z =
      eval_qpi(0.0, gates().copy_z, qubit());  // angle-free term
  return compose(lift_contraction(copy_z), fst(2, 2));
}

KrausMap measure_phi(double phi) {
  return compose(lift_contraction(eval_qpi(phi, gates().copy_x, qubit())),
                 fst(2, 2));
}

KrausMap compose(const KrausMap& a, const KrausMap& b) {
  if (a.out_dim() != b.in_dim())
    throw DimensionError("compose: channel dimensions disagree");
  std::vector<CMatrix> ks;
  ks.reserve(a.kraus().size() * b.kraus().size());
  for (const CMatrix& kb : b.kraus()) {
    for (const CMatrix& ka : a.kraus()) ks.push_back(kb * ka);
  }
  return KrausMap(a.in_dim(), b.out_dim(), std::move(ks));
}

KrausMap tensor(const KrausMap& a, const KrausMap& b) {
  std::vector<CMatrix> ks;
  ks.reserve(a.kraus().size() * b.kraus().size());
  for (const CMatrix& ka : a.kraus()) {
    for (const CMatrix& kb : b.kraus()) ks.push_back(kron(ka, kb));
  }
  return KrausMap(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(),
                  std::move(ks));
}

CMatrix apply_raw(const KrausMap& k, const CMatrix& rho) {
  if (rho.rows() != k.in_dim() || rho.cols() != k.in_dim())
    throw DimensionError("apply: state dimension mismatch");
  CMatrix out = CMatrix::Zero(k.out_dim(), k.out_dim());
  for (const CMatrix& op : k.kraus()) out += op * rho * op.adjoint();
  return out;
}

DensityMatrix apply(const KrausMap& k, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(k, rho.mat()));
}

}  // namespace qpi
