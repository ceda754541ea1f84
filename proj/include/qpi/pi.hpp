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

#include <memory>
#include <optional>
#include <string>

#include "qpi/types.hpp"

namespace qpi {

// Terms of the classical reversible core: the 15 primitive isomorphisms plus
// sequential, additive and multiplicative composition and inversion.
//
// Primitive types (forward direction):
//   id       : b <-> b
//   swapP    : b1+b2 <-> b2+b1          swapT    : b1*b2 <-> b2*b1
//   assoclP  : b1+(b2+b3) <-> (b1+b2)+b3
//   assocrP  : (b1+b2)+b3 <-> b1+(b2+b3)
//   assoclT  : b1*(b2*b3) <-> (b1*b2)*b3
//   assocrT  : (b1*b2)*b3 <-> b1*(b2*b3)
//   unitelP  : 0+b <-> b                unitilP  : b <-> 0+b
//   unitelT  : 1*b <-> b                unitilT  : b <-> 1*b
//   dist     : (b1+b2)*b3 <-> (b1*b3)+(b2*b3)     factor : inverse
//   absorbl  : b*0 <-> 0                factorzr : 0 <-> b*0
//
// factorzr carries an explicit type annotation (its domain 0 does not
// determine b). absorbl may carry one too, so that adjoints round-trip; a
// bare absorbl still typechecks forward but cannot be inverted.
class PiTerm {
 public:
  enum class Kind {
    Id,
    SwapP,
    AssoclP,
    AssocrP,
    UnitelP,
    UnitilP,
    SwapT,
    AssoclT,
    AssocrT,
    UnitelT,
    UnitilT,
    Dist,
    Factor,
    Absorbl,
    Factorzr,
    Seq,
    SumC,
    ProdC,
    Inv,
  };

  Kind kind() const { return node_->kind; }
  bool is_primitive() const { return kind() < Kind::Seq; }

  // First/second child of Seq, SumC, ProdC; child of Inv.
  PiTerm fst() const;
  PiTerm snd() const;
  PiTerm child() const { return fst(); }

  // Annotation of Absorbl/Factorzr.
  const std::optional<TypeExpr>& annotation() const { return node_->ann; }

  friend bool operator==(const PiTerm& a, const PiTerm& b);
  friend bool operator!=(const PiTerm& a, const PiTerm& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> a, b;
    std::optional<TypeExpr> ann;
  };
  explicit PiTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend PiTerm make_prim(Kind k, std::optional<TypeExpr> ann);
  friend PiTerm make_comp(Kind k, const PiTerm& a, const PiTerm& b);
  friend PiTerm make_inv(const PiTerm& c);
};

namespace pi {

PiTerm id();
PiTerm swap_p();
PiTerm assocl_p();
PiTerm assocr_p();
PiTerm unitel_p();
PiTerm unitil_p();
PiTerm swap_t();
PiTerm assocl_t();
PiTerm assocr_t();
PiTerm unitel_t();
PiTerm unitil_t();
PiTerm dist();
PiTerm factor();
PiTerm absorbl();
PiTerm absorbl(const TypeExpr& b);
PiTerm factorzr(const TypeExpr& b);
PiTerm factorzr_unannotated();

PiTerm seq(const PiTerm& a, const PiTerm& b);
PiTerm sum_c(const PiTerm& a, const PiTerm& b);
PiTerm prod_c(const PiTerm& a, const PiTerm& b);
PiTerm inv(const PiTerm& c);

// Derived constructs: ctrl c = dist ; id + (id * c) ; factor, and the
// negation/controlled-negation family built from it.
PiTerm ctrl(const PiTerm& c);
PiTerm x();
PiTerm cx();
PiTerm ccx();

}  // namespace pi

// Forward, domain-directed type inference. Returns the unique codomain, or
// throws TypeCheckError naming the offending subterm.
TypeExpr typecheck(const PiTerm& c, const TypeExpr& domain);

// Structural inverse: primitives map to their duals, Seq reverses, Inv
// cancels. Total, and an involution.
PiTerm adjoint(const PiTerm& c);

// Surface syntax rendering (matches the .qpi grammar).
std::string to_string(const PiTerm& c);

}  // namespace qpi
