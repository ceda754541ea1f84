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

#include "qpi/pi.hpp"

#include "qpi/linalg.hpp"

namespace qpi {

PiTerm make_prim(PiTerm::Kind k, std::optional<TypeExpr> ann) {
  return PiTerm(std::make_shared<const PiTerm::Node>(
      PiTerm::Node{k, nullptr, nullptr, std::move(ann)}));
}

PiTerm make_comp(PiTerm::Kind k, const PiTerm& a, const PiTerm& b) {
  return PiTerm(std::make_shared<const PiTerm::Node>(
      PiTerm::Node{k, a.node_, b.node_, std::nullopt}));
}

PiTerm make_inv(const PiTerm& c) {
  return PiTerm(std::make_shared<const PiTerm::Node>(
      PiTerm::Node{PiTerm::Kind::Inv, c.node_, nullptr, std::nullopt}));
}

PiTerm PiTerm::fst() const {
  if (!node_->a) throw Error("PiTerm: no child");
  return PiTerm(node_->a);
}

PiTerm PiTerm::snd() const {
  if (!node_->b) throw Error("PiTerm: no second child");
  return PiTerm(node_->b);
}

bool operator==(const PiTerm& a, const PiTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PiTerm::Kind::Seq:
    case PiTerm::Kind::SumC:
    case PiTerm::Kind::ProdC:
      return a.fst() == b.fst() && a.snd() == b.snd();
    case PiTerm::Kind::Inv:
      return a.child() == b.child();
    case PiTerm::Kind::Absorbl:
    case PiTerm::Kind::Factorzr: {
      const auto &x = a.annotation(), &y = b.annotation();
      if (x.has_value() != y.has_value()) return false;
      return !x.has_value() || *x == *y;
    }
    default:
      return true;
  }
}

namespace pi {

using K = PiTerm::Kind;

PiTerm id() { return make_prim(K::Id, std::nullopt); }
PiTerm swap_p() { return make_prim(K::SwapP, std::nullopt); }
PiTerm assocl_p() { return make_prim(K::AssoclP, std::nullopt); }
PiTerm assocr_p() { return make_prim(K::AssocrP, std::nullopt); }
PiTerm unitel_p() { return make_prim(K::UnitelP, std::nullopt); }
PiTerm unitil_p() { return make_prim(K::UnitilP, std::nullopt); }
PiTerm swap_t() { return make_prim(K::SwapT, std::nullopt); }
PiTerm assocl_t() { return make_prim(K::AssoclT, std::nullopt); }
PiTerm assocr_t() { return make_prim(K::AssocrT, std::nullopt); }
PiTerm unitel_t() { return make_prim(K::UnitelT, std::nullopt); }
PiTerm unitil_t() { return make_prim(K::UnitilT, std::nullopt); }
PiTerm dist() { return make_prim(K::Dist, std::nullopt); }
PiTerm factor() { return make_prim(K::Factor, std::nullopt); }
PiTerm absorbl() { return make_prim(K::Absorbl, std::nullopt); }
PiTerm absorbl(const TypeExpr& b) { return make_prim(K::Absorbl, b); }
PiTerm factorzr(const TypeExpr& b) { return make_prim(K::Factorzr, b); }
PiTerm factorzr_unannotated() { return make_prim(K::Factorzr, std::nullopt); }

PiTerm seq(const PiTerm& a, const PiTerm& b) { return make_comp(K::Seq, a, b); }
PiTerm sum_c(const PiTerm& a, const PiTerm& b) {
  return make_comp(K::SumC, a, b);
}
PiTerm prod_c(const PiTerm& a, const PiTerm& b) {
  return make_comp(K::ProdC, a, b);
}
PiTerm inv(const PiTerm& c) { return make_inv(c); }

PiTerm ctrl(const PiTerm& c) {
  return seq(dist(), seq(sum_c(id(), prod_c(id(), c)), factor()));
}

PiTerm x() { return swap_p(); }
PiTerm cx() { return ctrl(x()); }
PiTerm ccx() { return ctrl(cx()); }

}  // namespace pi

namespace {

[[noreturn]] void type_fail(const PiTerm& c, const TypeExpr& domain,
                            const std::string& expected) {
  throw TypeCheckError("type error at `" + to_string(c) + "`: expected " +
                       expected + ", got " + domain.str());
}

}  // namespace

TypeExpr typecheck(const PiTerm& c, const TypeExpr& d) {
  using K = PiTerm::Kind;
  switch (c.kind()) {
    case K::Id:
      return d;
    case K::SwapP:
      if (!d.is_sum()) type_fail(c, d, "a sum type");
      return TypeExpr::sum(d.right(), d.left());
    case K::AssoclP:
      if (!d.is_sum() || !d.right().is_sum())
        type_fail(c, d, "b1+(b2+b3)");
      return TypeExpr::sum(TypeExpr::sum(d.left(), d.right().left()),
                           d.right().right());
    case K::AssocrP:
      if (!d.is_sum() || !d.left().is_sum()) type_fail(c, d, "(b1+b2)+b3");
      return TypeExpr::sum(d.left().left(),
                           TypeExpr::sum(d.left().right(), d.right()));
    case K::UnitelP:
      if (!d.is_sum() || !d.left().is_zero()) type_fail(c, d, "0+b");
      return d.right();
    case K::UnitilP:
      return TypeExpr::sum(TypeExpr::zero(), d);
    case K::SwapT:
      if (!d.is_prod()) type_fail(c, d, "a product type");
      return TypeExpr::prod(d.right(), d.left());
    case K::AssoclT:
      if (!d.is_prod() || !d.right().is_prod())
        type_fail(c, d, "b1*(b2*b3)");
      return TypeExpr::prod(TypeExpr::prod(d.left(), d.right().left()),
                            d.right().right());
    case K::AssocrT:
      if (!d.is_prod() || !d.left().is_prod()) type_fail(c, d, "(b1*b2)*b3");
      return TypeExpr::prod(d.left().left(),
                            TypeExpr::prod(d.left().right(), d.right()));
    case K::UnitelT:
      if (!d.is_prod() || !d.left().is_one()) type_fail(c, d, "1*b");
      return d.right();
    case K::UnitilT:
      return TypeExpr::prod(TypeExpr::one(), d);
    case K::Dist:
      if (!d.is_prod() || !d.left().is_sum()) type_fail(c, d, "(b1+b2)*b3");
      return TypeExpr::sum(TypeExpr::prod(d.left().left(), d.right()),
                           TypeExpr::prod(d.left().right(), d.right()));
    case K::Factor: {
      if (!d.is_sum() || !d.left().is_prod() || !d.right().is_prod())
        type_fail(c, d, "(b1*b3)+(b2*b3)");
      if (d.left().right() != d.right().right())
        type_fail(c, d, "(b1*b3)+(b2*b3) with equal right factors");
      return TypeExpr::prod(TypeExpr::sum(d.left().left(), d.right().left()),
                            d.left().right());
    }
    case K::Absorbl:
      if (!d.is_prod() || !d.right().is_zero()) type_fail(c, d, "b*0");
      if (c.annotation() && *c.annotation() != d.left())
        type_fail(c, d, c.annotation()->str() + "*0");
      return TypeExpr::zero();
    case K::Factorzr:
      if (!d.is_zero()) type_fail(c, d, "0");
      if (!c.annotation())
        throw TypeCheckError(
            "type error at `factorzr`: missing type annotation");
      return TypeExpr::prod(*c.annotation(), TypeExpr::zero());
    case K::Seq: {
      const TypeExpr mid = typecheck(c.fst(), d);
      return typecheck(c.snd(), mid);
    }
    case K::SumC: {
      if (!d.is_sum()) type_fail(c, d, "a sum type");
      return TypeExpr::sum(typecheck(c.fst(), d.left()),
                           typecheck(c.snd(), d.right()));
    }
    case K::ProdC: {
      if (!d.is_prod()) type_fail(c, d, "a product type");
      return TypeExpr::prod(typecheck(c.fst(), d.left()),
                            typecheck(c.snd(), d.right()));
    }
    case K::Inv:
      // inv c : b2 <-> b1 when c : b1 <-> b2; forward-check via the
      // structural inverse.
      return typecheck(adjoint(c.child()), d);
  }
  throw Error("typecheck: unreachable");
}

PiTerm adjoint(const PiTerm& c) {
  using K = PiTerm::Kind;
  switch (c.kind()) {
    case K::Id:
    case K::SwapP:
    case K::SwapT:
      return c;
    case K::AssoclP:
      return pi::assocr_p();
    case K::AssocrP:
      return pi::assocl_p();
    case K::UnitelP:
      return pi::unitil_p();
    case K::UnitilP:
      return pi::unitel_p();
    case K::AssoclT:
      return pi::assocr_t();
    case K::AssocrT:
      return pi::assocl_t();
    case K::UnitelT:
      return pi::unitil_t();
    case K::UnitilT:
      return pi::unitel_t();
    case K::Dist:
      return pi::factor();
    case K::Factor:
      return pi::dist();
    case K::Absorbl:
      return c.annotation() ? pi::factorzr(*c.annotation())
                            : pi::factorzr_unannotated();
    case K::Factorzr:
      return c.annotation() ? pi::absorbl(*c.annotation()) : pi::absorbl();
    case K::Seq:
      return pi::seq(adjoint(c.snd()), adjoint(c.fst()));
    case K::SumC:
      return pi::sum_c(adjoint(c.fst()), adjoint(c.snd()));
    case K::ProdC:
      return pi::prod_c(adjoint(c.fst()), adjoint(c.snd()));
    case K::Inv:
      return c.child();
  }
  throw Error("adjoint: unreachable");
}

namespace {

// Recognize the exact expansion of `ctrl c` so the printer can restore the
// surface sugar.
std::optional<PiTerm> match_ctrl(const PiTerm& c) {
  using K = PiTerm::Kind;
  if (c.kind() != K::Seq || c.fst().kind() != K::Dist) return std::nullopt;
  const PiTerm rest = c.snd();
  if (rest.kind() != K::Seq || rest.snd().kind() != K::Factor)
    return std::nullopt;
  const PiTerm mid = rest.fst();
  if (mid.kind() != K::SumC || mid.fst().kind() != K::Id) return std::nullopt;
  const PiTerm right = mid.snd();
  if (right.kind() != K::ProdC || right.fst().kind() != K::Id)
    return std::nullopt;
  return right.snd();
}

// Precedence: ';' (1) < '+' (2) < '*' (3) < unary (4).
void render(const PiTerm& c, std::string& out, int parent_prec) {
  using K = PiTerm::Kind;
  if (auto inner = match_ctrl(c)) {
    out += "ctrl ";
    render(*inner, out, 4);
    return;
  }
  switch (c.kind()) {
    case K::Id: out += "id"; return;
    case K::SwapP: out += "swapP"; return;
    case K::AssoclP: out += "assoclP"; return;
    case K::AssocrP: out += "assocrP"; return;
    case K::UnitelP: out += "unitelP"; return;
    case K::UnitilP: out += "unitilP"; return;
    case K::SwapT: out += "swapT"; return;
    case K::AssoclT: out += "assoclT"; return;
    case K::AssocrT: out += "assocrT"; return;
    case K::UnitelT: out += "unitelT"; return;
    case K::UnitilT: out += "unitilT"; return;
    case K::Dist: out += "dist"; return;
    case K::Factor: out += "factor"; return;
    case K::Absorbl:
      out += "absorbl";
      if (c.annotation()) out += "[" + c.annotation()->str() + "]";
      return;
    case K::Factorzr:
      out += "factorzr[" +
             (c.annotation() ? c.annotation()->str() : std::string("?")) + "]";
      return;
    case K::Seq: {
      const bool need = parent_prec > 1;
      if (need) out += '(';
      render(c.fst(), out, 1);
      out += " ; ";
      render(c.snd(), out, 2);
      if (need) out += ')';
      return;
    }
    case K::SumC: {
      const bool need = parent_prec > 2;
      if (need) out += '(';
      render(c.fst(), out, 2);
      out += " + ";
      render(c.snd(), out, 3);
      if (need) out += ')';
      return;
    }
    case K::ProdC: {
      const bool need = parent_prec > 3;
      if (need) out += '(';
      render(c.fst(), out, 3);
      out += " * ";
      render(c.snd(), out, 4);
      if (need) out += ')';
      return;
    }
    case K::Inv: {
      out += "inv ";
      render(c.child(), out, 4);
      return;
    }
  }
}

}  // namespace

std::string to_string(const PiTerm& c) {
  std::string out;
  render(c, out, 0);
  return out;
}

}  // namespace qpi
