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

#include "qpi/states.hpp"

namespace qpi {

AncType AncType::one() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::One, nullptr, nullptr});
  return AncType(n);
}

AncType AncType::bit() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::Bit, nullptr, nullptr});
  return AncType(n);
}

AncType AncType::prod(const AncType& l, const AncType& r) {
  return AncType(
      std::make_shared<const Node>(Node{Kind::Prod, l.node_, r.node_}));
}

AncType AncType::from_type(const TypeExpr& t) {
  if (t.is_one()) return one();
  if (t == qubit()) return bit();
  if (t.is_prod()) return prod(from_type(t.left()), from_type(t.right()));
  throw TypeCheckError("not an ancilla type (1, 1+1 or products): " + t.str());
}

AncType AncType::left() const {
  if (!node_->l) throw Error("AncType::left on atom");
  return AncType(node_->l);
}

AncType AncType::right() const {
  if (!node_->r) throw Error("AncType::right on atom");
  return AncType(node_->r);
}

TypeExpr AncType::type() const {
  switch (kind()) {
    case Kind::One:
      return TypeExpr::one();
    case Kind::Bit:
      return qubit();
    case Kind::Prod:
      return TypeExpr::prod(left().type(), right().type());
  }
  throw Error("AncType::type: unreachable");
}

Eigen::Index AncType::dim() const { return type().dim(); }

CMatrix AncType::ket0() const {
  switch (kind()) {
    case Kind::One:
      return CMatrix::Identity(1, 1);
    case Kind::Bit: {
      CMatrix k = CMatrix::Zero(2, 1);
      k(0, 0) = 1.0;
      return k;
    }
    case Kind::Prod:
      return kron(left().ket0(), right().ket0());
  }
  throw Error("AncType::ket0: unreachable");
}

struct QpiTerm::Node {
  Kind kind;
  std::shared_ptr<const Node> a, b;
  std::optional<PizhTerm> body;
  std::optional<AncType> in_anc, out_anc;
  std::optional<TypeExpr> spectator;
};

struct QpiFactory {
  static QpiTerm prim(QpiTerm::Kind k) {
    return QpiTerm(std::make_shared<const QpiTerm::Node>(QpiTerm::Node{
        k, nullptr, nullptr, std::nullopt, std::nullopt, std::nullopt,
        std::nullopt}));
  }
  static QpiTerm lift(const AncType& n1, const PizhTerm& m, const AncType& n2) {
    return QpiTerm(std::make_shared<const QpiTerm::Node>(
        QpiTerm::Node{QpiTerm::Kind::Lift, nullptr, nullptr, m, n1, n2,
                      std::nullopt}));
  }
  static QpiTerm arr(const PizhTerm& m) {
    return QpiTerm(std::make_shared<const QpiTerm::Node>(
        QpiTerm::Node{QpiTerm::Kind::Arr, nullptr, nullptr, m, std::nullopt,
                      std::nullopt, std::nullopt}));
  }
  static QpiTerm binary(QpiTerm::Kind k, const QpiTerm& a, const QpiTerm& b) {
    return QpiTerm(std::make_shared<const QpiTerm::Node>(QpiTerm::Node{
        k, a.node_, b.node_, std::nullopt, std::nullopt, std::nullopt,
        std::nullopt}));
  }
  static QpiTerm unary(QpiTerm::Kind k, const QpiTerm& a,
                       std::optional<TypeExpr> spectator) {
    return QpiTerm(std::make_shared<const QpiTerm::Node>(QpiTerm::Node{
        k, a.node_, nullptr, std::nullopt, std::nullopt, std::nullopt,
        std::move(spectator)}));
  }
};

QpiTerm::Kind QpiTerm::kind() const { return node_->kind; }

QpiTerm QpiTerm::fst() const {
  if (!node_->a) throw Error("QpiTerm: no child");
  return QpiTerm(node_->a);
}

QpiTerm QpiTerm::snd() const {
  if (!node_->b) throw Error("QpiTerm: no second child");
  return QpiTerm(node_->b);
}

const PizhTerm& QpiTerm::body() const {
  if (!node_->body) throw Error("QpiTerm: no body");
  return *node_->body;
}

const AncType& QpiTerm::in_anc() const {
  if (!node_->in_anc) throw Error("QpiTerm: no input ancilla");
  return *node_->in_anc;
}

const AncType& QpiTerm::out_anc() const {
  if (!node_->out_anc) throw Error("QpiTerm: no output ancilla");
  return *node_->out_anc;
}

const TypeExpr& QpiTerm::spectator() const {
  if (!node_->spectator) throw Error("QpiTerm: no spectator type");
  return *node_->spectator;
}

namespace arrow {

using K = QpiTerm::Kind;

QpiTerm lift(const AncType& n1, const PizhTerm& body, const AncType& n2) {
  return QpiFactory::lift(n1, body, n2);
}
QpiTerm arr(const PizhTerm& m) { return QpiFactory::arr(m); }
QpiTerm seq(const QpiTerm& a, const QpiTerm& b) {
  return QpiFactory::binary(K::Seq, a, b);
}
QpiTerm first(const QpiTerm& d, const TypeExpr& spectator) {
  return QpiFactory::unary(K::First, d, spectator);
}
QpiTerm second(const QpiTerm& d, const TypeExpr& spectator) {
  return QpiFactory::unary(K::Second, d, spectator);
}
QpiTerm prod(const QpiTerm& a, const QpiTerm& b) {
  return QpiFactory::binary(K::Prod, a, b);
}
QpiTerm inv(const QpiTerm& d) {
  return QpiFactory::unary(K::Inv, d, std::nullopt);
}
QpiTerm zero() { return QpiFactory::prim(K::Zero); }
QpiTerm assert_zero() { return QpiFactory::prim(K::AssertZero); }
QpiTerm id() { return QpiFactory::prim(K::Id); }
QpiTerm swap_t() { return QpiFactory::prim(K::SwapT); }
QpiTerm assocl_t() { return QpiFactory::prim(K::AssoclT); }
QpiTerm assocr_t() { return QpiFactory::prim(K::AssocrT); }
QpiTerm unite_t() { return QpiFactory::prim(K::UniteT); }
QpiTerm uniti_t() { return QpiFactory::prim(K::UnitiT); }

}  // namespace arrow

QpiTerm qpi_adjoint(const QpiTerm& d) {
  using K = QpiTerm::Kind;
  switch (d.kind()) {
    case K::Lift:
      return arrow::lift(d.out_anc(), pizh::inv(d.body()), d.in_anc());
    case K::Arr:
      return arrow::arr(pizh::inv(d.body()));
    case K::Seq:
      return arrow::seq(qpi_adjoint(d.snd()), qpi_adjoint(d.fst()));
    case K::First:
      return arrow::first(qpi_adjoint(d.child()), d.spectator());
    case K::Second:
      return arrow::second(qpi_adjoint(d.child()), d.spectator());
    case K::Prod:
      return arrow::prod(qpi_adjoint(d.fst()), qpi_adjoint(d.snd()));
    case K::Inv:
      return d.child();
    case K::Zero:
      return arrow::assert_zero();
    case K::AssertZero:
      return arrow::zero();
    case K::Id:
    case K::SwapT:
      return d;
    case K::AssoclT:
      return arrow::assocr_t();
    case K::AssocrT:
      return arrow::assocl_t();
    case K::UniteT:
      return arrow::uniti_t();
    case K::UnitiT:
      return arrow::unite_t();
  }
  throw Error("qpi_adjoint: unreachable");
}

namespace {

PizhTerm pizh_coherence(QpiTerm::Kind k) {
  using K = QpiTerm::Kind;
  switch (k) {
    case K::Id:
      return pizh::id();
    case K::SwapT:
      return pizh::swap_t();
    case K::AssoclT:
      return pizh::assocl_t();
    case K::AssocrT:
      return pizh::assocr_t();
    case K::UniteT:
      return pizh::unite_t();
    case K::UnitiT:
      return pizh::uniti_t();
    default:
      throw Error("pizh_coherence: not a coherence");
  }
}

// Splits the codomain of a lift body into (value, ancilla) and checks the
// ancilla part matches the declared shape.
TypeExpr split_cod(const TypeExpr& body_cod, const AncType& n2) {
  if (!body_cod.is_prod() || body_cod.right() != n2.type()) {
    throw TypeCheckError("lift body must end in b*" + n2.type().str() +
                         ", got " + body_cod.str());
  }
  return body_cod.left();
}

}  // namespace

LiftForm desugar(const QpiTerm& d, const TypeExpr& dom) {
  using K = QpiTerm::Kind;
  switch (d.kind()) {
    case K::Lift: {
      const TypeExpr body_dom = TypeExpr::prod(dom, d.in_anc().type());
      const TypeExpr body_cod = typecheck_pizh(d.body(), body_dom);
      const TypeExpr cod = split_cod(body_cod, d.out_anc());
      return {d.in_anc(), d.body(), d.out_anc(), dom, cod};
    }
    case K::Arr: {
      // arr m = lift(unite >>> m >>> uniti) with trivial ancillas.
      const PizhTerm body = pizh::seq(
          pizh::unite_t(), pizh::seq(d.body(), pizh::uniti_t()));
      return desugar(arrow::lift(AncType::one(), body, AncType::one()), dom);
    }
    case K::Zero: {
      if (!dom.is_one())
        throw TypeCheckError("zero expects domain 1, got " + dom.str());
      return desugar(arrow::lift(AncType::bit(), pizh::swap_t(),
                                 AncType::one()),
                     dom);
    }
    case K::AssertZero: {
      if (dom != qubit())
        throw TypeCheckError("assertZero expects domain 1+1, got " +
                             dom.str());
      return desugar(arrow::lift(AncType::one(), pizh::swap_t(),
                                 AncType::bit()),
                     dom);
    }
    case K::Id:
    case K::SwapT:
    case K::AssoclT:
    case K::AssocrT:
    case K::UniteT:
    case K::UnitiT:
      return desugar(arrow::arr(pizh_coherence(d.kind())), dom);
    case K::Seq: {
      const LiftForm l1 = desugar(d.fst(), dom);
      const LiftForm l2 = desugar(d.snd(), l1.cod);
      const TypeExpr n1t = l1.in_anc.type(), n2t = l1.out_anc.type();
      const TypeExpr n3t = l2.in_anc.type(), n4t = l2.out_anc.type();
      // b1*(n1*n3) -> (b1*n1)*n3 -> (b2*n2)*n3 -> b2*(n2*n3)
      //            -> b2*(n3*n2) -> (b2*n3)*n2 -> (b3*n4)*n2 -> b3*(n4*n2)
      const PizhTerm body = pizh::seq(
          pizh::assocl_t(),
          pizh::seq(
              pizh::first(l1.body, n3t),
              pizh::seq(
                  pizh::assocr_t(),
                  pizh::seq(
                      pizh::second(pizh::swap_t(), l1.cod),
                      pizh::seq(pizh::assocl_t(),
                                pizh::seq(pizh::first(l2.body, n2t),
                                          pizh::assocr_t()))))));
      return desugar(
          arrow::lift(AncType::prod(l1.in_anc, l2.in_anc), body,
                      AncType::prod(l2.out_anc, l1.out_anc)),
          dom);
    }
    case K::First: {
      if (!dom.is_prod() || dom.right() != d.spectator()) {
        throw TypeCheckError("type error at `first`: expected domain b*" +
                             d.spectator().str() + ", got " + dom.str());
      }
      const TypeExpr b3 = dom.right();
      const LiftForm l = desugar(d.child(), dom.left());
      // (b1*b3)*n1 -> b1*(b3*n1) -> b1*(n1*b3) -> (b1*n1)*b3
      //            -> (b2*n2)*b3 -> b2*(n2*b3) -> b2*(b3*n2) -> (b2*b3)*n2
      const PizhTerm body = pizh::seq(
          pizh::assocr_t(),
          pizh::seq(
              pizh::second(pizh::swap_t(), l.dom),
              pizh::seq(
                  pizh::assocl_t(),
                  pizh::seq(pizh::first(l.body, b3),
                            pizh::seq(pizh::assocr_t(),
                                      pizh::seq(pizh::second(pizh::swap_t(),
                                                             l.cod),
                                                pizh::assocl_t()))))));
      return desugar(arrow::lift(l.in_anc, body, l.out_anc), dom);
    }
    case K::Second: {
      if (!dom.is_prod() || dom.left() != d.spectator()) {
        throw TypeCheckError("type error at `second`: expected domain " +
                             d.spectator().str() + "*b, got " + dom.str());
      }
      const QpiTerm desugared = arrow::seq(
          arrow::swap_t(),
          arrow::seq(arrow::first(d.child(), d.spectator()),
                     arrow::swap_t()));
      return desugar(desugared, dom);
    }
    case K::Prod: {
      if (!dom.is_prod()) {
        throw TypeCheckError(
            "type error at `***`: expected a product domain, got " +
            dom.str());
      }
      const TypeExpr cod1 = typecheck_qpi(d.fst(), dom.left());
      const QpiTerm desugared = arrow::seq(
          arrow::first(d.fst(), dom.right()), arrow::second(d.snd(), cod1));
      return desugar(desugared, dom);
    }
    case K::Inv:
      return desugar(qpi_adjoint(d.child()), dom);
  }
  throw Error("desugar: unreachable");
}

TypeExpr typecheck_qpi(const QpiTerm& d, const TypeExpr& domain) {
  return desugar(d, domain).cod;
}

CMatrix eval_qpi(double phi, const QpiTerm& d, const TypeExpr& domain) {
  const LiftForm l = desugar(d, domain);
  const CMatrix body =
      eval_pizh(phi, l.body, TypeExpr::prod(l.dom, l.in_anc.type()));
  const CMatrix in = kron(identity(l.dom.dim()), l.in_anc.ket0());
  const CMatrix out = kron(identity(l.cod.dim()), dagger(l.out_anc.ket0()));
  return out * body * in;
}

bool totality_check(double phi, const QpiTerm& d, const TypeExpr& domain,
                    double tol) {
  const CMatrix round_trip =
      eval_qpi(phi, arrow::seq(d, arrow::inv(d)), domain);
  return approx_eq(round_trip, identity(domain.dim()), tol).equal;
}

namespace {

void render_qpi(const QpiTerm& d, std::string& out, int parent_prec) {
  using K = QpiTerm::Kind;
  switch (d.kind()) {
    case K::Lift:
      out += "lift[" + d.in_anc().type().str() + "," +
             d.out_anc().type().str() + "] (" + to_string(d.body()) + ")";
      return;
    case K::Arr: {
      const auto bk = d.body().kind();
      const bool composite =
          bk == PizhTerm::Kind::Seq || bk == PizhTerm::Kind::First ||
          bk == PizhTerm::Kind::Second || bk == PizhTerm::Kind::Prod ||
          bk == PizhTerm::Kind::Inv;
      if (composite) out += '(';
      out += to_string(d.body());
      if (composite) out += ')';
      return;
    }
    case K::Zero: out += "zero"; return;
    case K::AssertZero: out += "assertZero"; return;
    case K::Id: out += "id"; return;
    case K::SwapT: out += "swapT"; return;
    case K::AssoclT: out += "assoclT"; return;
    case K::AssocrT: out += "assocrT"; return;
    case K::UniteT: out += "unitelT"; return;
    case K::UnitiT: out += "unitilT"; return;
    case K::Seq: {
      const bool need = parent_prec > 1;
      if (need) out += '(';
      render_qpi(d.fst(), out, 1);
      out += " >>> ";
      render_qpi(d.snd(), out, 2);
      if (need) out += ')';
      return;
    }
    case K::Prod: {
      const bool need = parent_prec > 2;
      if (need) out += '(';
      render_qpi(d.fst(), out, 2);
      out += " *** ";
      render_qpi(d.snd(), out, 3);
      if (need) out += ')';
      return;
    }
    case K::First:
      out += "first[" + d.spectator().str() + "] ";
      render_qpi(d.child(), out, 3);
      return;
    case K::Second:
      out += "second[" + d.spectator().str() + "] ";
      render_qpi(d.child(), out, 3);
      return;
    case K::Inv:
      out += "inv ";
      render_qpi(d.child(), out, 3);
      return;
  }
}

}  // namespace

std::string to_string(const QpiTerm& d) {
  std::string out;
  render_qpi(d, out, 0);
  return out;
}

}  // namespace qpi
