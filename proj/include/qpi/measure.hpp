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

#include <vector>

#include "qpi/linalg.hpp"
#include "qpi/types.hpp"

namespace qpi {

// Hermitian, positive semidefinite, trace in [0,1] (subnormalized states are
// allowed; trace < 1 means the computation may have failed). Validated on
// construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix mat);

  static DensityMatrix basis_state(Eigen::Index dim, Eigen::Index index);
  static DensityMatrix pure(const CMatrix& column);  // |v><v|

  const CMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double trace_real() const;

 private:
  CMatrix mat_;
};

// Trace-nonincreasing completely positive map in Kraus form:
// rho |-> sum_K K rho K†, with sum_K K†K <= I (within 1e-8).
class KrausMap {
 public:
  KrausMap(Eigen::Index in_dim, Eigen::Index out_dim,
           std::vector<CMatrix> kraus);

  Eigen::Index in_dim() const { return in_; }
  Eigen::Index out_dim() const { return out_; }
  const std::vector<CMatrix>& kraus() const { return ks_; }

 private:
  Eigen::Index in_, out_;
  std::vector<CMatrix> ks_;
};

// Pure conjugation rho |-> C rho C†; C must be a contraction.
KrausMap lift_contraction(const CMatrix& c);

KrausMap identity_channel(Eigen::Index dim);

// Full trace: Kraus set {<i| : i < dim}; output is the 1x1 trace.
KrausMap discard(Eigen::Index dim);
KrausMap discard(const TypeExpr& b);

// Partial traces: fst keeps the (most significant) left factor, snd the
// right one.
KrausMap fst(Eigen::Index d1, Eigen::Index d2);
KrausMap snd(Eigen::Index d1, Eigen::Index d2);
KrausMap fst(const TypeExpr& b1, const TypeExpr& b2);
KrausMap snd(const TypeExpr& b1, const TypeExpr& b2);

// Qubit measurements, derived as copy-then-project: measure_z = copyZ >>>
// fst and measure_phi = copyX >>> fst (so measure_phi depends on the angle).
KrausMap measure_z();
KrausMap measure_phi(double phi);

// Diagram-order composition: `a` runs first, then `b`.
KrausMap compose(const KrausMap& a, const KrausMap& b);
KrausMap tensor(const KrausMap& a, const KrausMap& b);
DensityMatrix apply(const KrausMap& k, const DensityMatrix& rho);

// Raw channel application without density-matrix validation; used to probe
// superoperator equality on arbitrary Hermitian inputs.
CMatrix apply_raw(const KrausMap& k, const CMatrix& rho);

}  // namespace qpi
