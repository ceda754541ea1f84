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

#include <cstdint>
#include <string>
#include <vector>

#include "qpi/states.hpp"

namespace qpi {

struct LawReport {
  std::string law;
  double phi = 0.0;
  bool holds = false;
  double max_deviation = 0.0;
  std::string lhs_dims;
  std::string rhs_dims;
  double tol = 0.0;
};

// Semantic equivalence of two reversible-layer terms at a common domain.
// Throws ContractError when the codomains disagree.
LawReport equiv(double phi, const QpiTerm& d1, const QpiTerm& d2,
                const TypeExpr& domain, double tol);

// The named law suite at a given angle: the eight classical-structure
// equations for copyZ/copyX, the four execution equations, complementarity
// (the six-stage composite against the identity scaled by 1/dim, the value
// the other laws force for its normalization), the change-of-basis form
// check (the evaluation of the rotated swap must be one of the four real
// involutive basis changes), the small circuit identities, the measurement
// conjugation law, and the controlled-S encoding check.
std::vector<LawReport> run_suite(double phi);

// Seeded property suite: permutation-unitarity, adjoint soundness and
// functoriality of the core semantics, rotation orthogonality, semantics
// preservation of list normalization, and the contraction bound for lifted
// terms.
std::vector<LawReport> random_property_suite(double phi, int count,
                                             std::uint64_t seed);

// The four real involutive complementary basis changes (Hadamard up to
// conjugation by Z and/or X).
const std::vector<CMatrix>& hadamard_family();

// Reads an 4x4 complex matrix into its real 8x8 form under the encoding
// a+ib -> [[a,-b],[b,a]] on a trailing encoding qubit.
CMatrix encode_complex(const CMatrix& c);

}  // namespace qpi
