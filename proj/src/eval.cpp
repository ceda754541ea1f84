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

#include "qpi/eval.hpp"

#include <cmath>

namespace qpi {

namespace {

CMatrix swap_sum_matrix(Eigen::Index d1, Eigen::Index d2) {
  CMatrix m = CMatrix::Zero(d1 + d2, d1 + d2);
  for (Eigen::Index i = 0; i < d1; ++i) m(d2 + i, i) = 1.0;
  for (Eigen::Index j = 0; j < d2; ++j) m(j, d1 + j) = 1.0;
  return m;
}

CMatrix swap_prod_matrix(Eigen::Index d1, Eigen::Index d2) {
  CMatrix m = CMatrix::Zero(d1 * d2, d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) m(j * d1 + i, i * d2 + j) = 1.0;
  }
  return m;
}

struct Eval {
  CMatrix mat;
  TypeExpr cod;
};

Eval eval_rec(const PiTerm& c, const TypeExpr& d) {
  using K = PiTerm::Kind;
  switch (c.kind()) {
    case K::Id:
    case K::AssoclP:
    case K::AssocrP:
    case K::UnitelP:
    case K::UnitilP:
    case K::AssoclT:
    case K::AssocrT:
    case K::UnitelT:
    case K::UnitilT:
    case K::Dist:
    case K::Factor:
    case K::Absorbl:
    case K::Factorzr: {
      // Dim-preserving coherences are identity permutations under the fixed
      // index conventions; the absorption pair lands in dimension 0.
      const TypeExpr cod = typecheck(c, d);
      return {identity(cod.dim()), cod};
    }
    case K::SwapP: {
      const TypeExpr cod = typecheck(c, d);
      return {swap_sum_matrix(d.left().dim(), d.right().dim()), cod};
    }
    case K::SwapT: {
      const TypeExpr cod = typecheck(c, d);
      return {swap_prod_matrix(d.left().dim(), d.right().dim()), cod};
    }
    case K::Seq: {
      Eval e1 = eval_rec(c.fst(), d);
      Eval e2 = eval_rec(c.snd(), e1.cod);
      return {e2.mat * e1.mat, e2.cod};
    }
    case K::SumC: {
      if (!d.is_sum())
        throw TypeCheckError("type error at `" + to_string(c) +
                             "`: expected a sum type, got " + d.str());
      Eval e1 = eval_rec(c.fst(), d.left());
      Eval e2 = eval_rec(c.snd(), d.right());
      return {dsum(e1.mat, e2.mat), TypeExpr::sum(e1.cod, e2.cod)};
    }
    case K::ProdC: {
      if (!d.is_prod())
        throw TypeCheckError("type error at `" + to_string(c) +
                             "`: expected a product type, got " + d.str());
      Eval e1 = eval_rec(c.fst(), d.left());
      Eval e2 = eval_rec(c.snd(), d.right());
      return {kron(e1.mat, e2.mat), TypeExpr::prod(e1.cod, e2.cod)};
    }
    case K::Inv: {
      const TypeExpr dom_c = typecheck(adjoint(c.child()), d);
      Eval e = eval_rec(c.child(), dom_c);
      return {dagger(e.mat), dom_c};
    }
  }
  throw Error("eval_pi: unreachable");
}

}  // namespace

CMatrix eval_pi(const PiTerm& c, const TypeExpr& domain) {
  return eval_rec(c, domain).mat;
}

CMatrix rot(double phi, const TypeExpr& b) {
  switch (b.kind()) {
    case TypeExpr::Kind::Zero:
      return CMatrix(0, 0);
    case TypeExpr::Kind::One:
      return CMatrix::Identity(1, 1);
    case TypeExpr::Kind::Prod:
      return kron(rot(phi, b.left()), rot(phi, b.right()));
    case TypeExpr::Kind::Sum: {
      if (is_iso_one(b.left()) && is_iso_one(b.right())) {
        // The unit isomorphisms conjugating r(phi) are 1x1 identities under
        // the lexicographic convention, so they drop out.
        CMatrix r(2, 2);
        const double c = std::cos(phi), s = std::sin(phi);
        r << c, -s, s, c;
        return r;
      }
      return dsum(rot(phi, b.left()), rot(phi, b.right()));
    }
  }
  throw Error("rot: unreachable");
}

CMatrix eval_tagged(double phi, Tag tag, const PiTerm& c,
                    const TypeExpr& domain) {
  if (tag == Tag::Z) return eval_pi(c, domain);
  const TypeExpr cod = typecheck(c, domain);
  return dagger(rot(phi, cod)) * eval_pi(c, domain) * rot(phi, domain);
}

bool is_iso_one(const TypeExpr& b) { return b.dim() == 1; }

}  // namespace qpi
