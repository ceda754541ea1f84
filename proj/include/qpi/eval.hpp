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

#include "qpi/linalg.hpp"
#include "qpi/pi.hpp"
#include "qpi/types.hpp"

namespace qpi {

// Basis conventions, fixed once for every layer:
//  - the computational basis of a type is enumerated lexicographically;
//  - for b1+b2 the left summand occupies the first dim(b1) indices;
//  - for b1*b2 the left factor is most significant (index = i*dim(b2)+j).
// Under these conventions every associator, unitor and dist/factor denotes an
// identity matrix, and swapP/swapT denote the block-rotation and
// transposition permutations below.

// Matrix of a core term at the given domain: a dim(cod) x dim(dom)
// permutation matrix. Throws TypeCheckError on ill-typed terms.
CMatrix eval_pi(const PiTerm& c, const TypeExpr& domain);

// The per-type rotation family: empty at 0, [[1]] at any 1-dimensional type,
// the 2x2 rotation r(phi) at sums of two 1-dimensional types, and otherwise
// structural (dsum over +, kron over *). Real orthogonal.
CMatrix rot(double phi, const TypeExpr& b);

enum class Tag { Z, Phi };

// Z copy: the plain semantics; Phi copy: rot(cod)^-1 * eval_pi * rot(dom).
CMatrix eval_tagged(double phi, Tag tag, const PiTerm& c,
                    const TypeExpr& domain);

// True iff the type is isomorphic to 1 by unit elimination, i.e. dim == 1.
bool is_iso_one(const TypeExpr& b);

}  // namespace qpi
