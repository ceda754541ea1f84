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

#include "qpi/amalgam.hpp"

namespace qpi {

// Ancilla types: 1, a bit (1+1), and products thereof. Always a power of two
// in dimension.
class AncType {
 public:
  enum class Kind { One, Bit, Prod };

  static AncType one();
  static AncType bit();
  static AncType prod(const AncType& l, const AncType& r);

  // Recover an ancilla shape from a general type; throws TypeCheckError when
  // the type is not built from 1, 1+1 and products.
  static AncType from_type(const TypeExpr& t);

  Kind kind() const { return node_->kind; }
  AncType left() const;
  AncType right() const;

  TypeExpr type() const;
  Eigen::Index dim() const;

  // The all-|0> basis column of the ancilla: each bit contributes |0>, each
  // unit contributes the scalar 1.
  CMatrix ket0() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> l, r;
  };
  explicit AncType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Terms of the states-and-effects layer. Everything desugars to a single
// lift whose body is an arrow-layer term of type b1*n1 <-> b2*n2; the
// denotation contracts the input ancilla against |0...0> and the output
// ancilla against <0...0|.
class QpiTerm {
 public:
  enum class Kind {
    Lift,
    Arr,
    Seq,
    First,
    Second,
    Prod,
    Inv,
    Zero,
    AssertZero,
    Id,
    SwapT,
    AssoclT,
    AssocrT,
    UniteT,
    UnitiT,
  };

  Kind kind() const;
  QpiTerm fst() const;
  QpiTerm snd() const;
  QpiTerm child() const { return fst(); }
  const PizhTerm& body() const;        // Lift / Arr
  const AncType& in_anc() const;       // Lift
  const AncType& out_anc() const;      // Lift
  const TypeExpr& spectator() const;   // First / Second

 private:
  struct Node;
  explicit QpiTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct QpiFactory;
};

namespace arrow {

QpiTerm lift(const AncType& n1, const PizhTerm& body, const AncType& n2);
QpiTerm arr(const PizhTerm& m);
QpiTerm seq(const QpiTerm& a, const QpiTerm& b);
QpiTerm first(const QpiTerm& d, const TypeExpr& spectator);
QpiTerm second(const QpiTerm& d, const TypeExpr& spectator);
QpiTerm prod(const QpiTerm& a, const QpiTerm& b);
QpiTerm inv(const QpiTerm& d);
QpiTerm zero();         // 1 ~> 1+1, the state |0>
QpiTerm assert_zero();  // 1+1 ~> 1, the effect <0|
QpiTerm id();
QpiTerm swap_t();
QpiTerm assocl_t();
QpiTerm assocr_t();
QpiTerm unite_t();
QpiTerm uniti_t();

}  // namespace arrow

// Lift normal form together with the types the desugaring derived.
struct LiftForm {
  AncType in_anc;
  PizhTerm body;
  AncType out_anc;
  TypeExpr dom;
  TypeExpr cod;
};

// Rewrites any term into a single lift, threading ancillas through products
// exactly as the layer's composition recipes prescribe.
LiftForm desugar(const QpiTerm& d, const TypeExpr& domain);

TypeExpr typecheck_qpi(const QpiTerm& d, const TypeExpr& domain);

// Structural inverse; inv zero = assertZero, inv (lift m) = lift (inv m).
QpiTerm qpi_adjoint(const QpiTerm& d);

// The dim(cod) x dim(dom) contraction
//   (I (x) <0..0|_n2) . eval_pizh(body) . (I (x) |0..0>_n1).
CMatrix eval_qpi(double phi, const QpiTerm& d, const TypeExpr& domain);

// True iff d >>> inv d denotes the identity (within tol): the terms on which
// hiding is safe.
bool totality_check(double phi, const QpiTerm& d, const TypeExpr& domain,
                    double tol = 1e-9);

std::string to_string(const QpiTerm& d);

}  // namespace qpi
