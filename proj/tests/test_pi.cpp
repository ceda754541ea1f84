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

#include <doctest.h>

#include "qpi/eval.hpp"
#include "qpi/gen.hpp"
#include "qpi/pi.hpp"

using namespace qpi;

namespace {
const TypeExpr q = qubit();
}

TEST_CASE("type dims") {
  CHECK(q.dim() == 2);
  CHECK(TypeExpr::prod(q, q).dim() == 4);
  CHECK(TypeExpr::prod(TypeExpr::zero(), q).dim() == 0);
  CHECK(TypeExpr::one().dim() == 1);
}

TEST_CASE("type printing and equality") {
  CHECK(q.str() == "qubit");
  CHECK(TypeExpr::prod(q, TypeExpr::sum(TypeExpr::zero(), q)).str() ==
        "qubit*(0+qubit)");
  CHECK(qubits(3).str() == "qubit*(qubit*qubit)");
  CHECK(qubits(2) == TypeExpr::prod(q, q));
  CHECK(qubits(2) != TypeExpr::sum(q, q));
}

TEST_CASE("typecheck of primitives follows the typing table") {
  CHECK(typecheck(pi::swap_p(), q) == q);
  CHECK(typecheck(pi::swap_p(), TypeExpr::sum(TypeExpr::zero(), q)) ==
        TypeExpr::sum(q, TypeExpr::zero()));
  CHECK(typecheck(pi::dist(), TypeExpr::prod(q, q)) ==
        TypeExpr::sum(TypeExpr::prod(TypeExpr::one(), q),
                      TypeExpr::prod(TypeExpr::one(), q)));
  CHECK(typecheck(pi::unitil_t(), q) == TypeExpr::prod(TypeExpr::one(), q));
  CHECK(typecheck(pi::factorzr(q), TypeExpr::zero()) ==
        TypeExpr::prod(q, TypeExpr::zero()));
}

TEST_CASE("typecheck of derived controls") {
  CHECK(typecheck(pi::ctrl(pi::swap_p()), TypeExpr::prod(q, q)) ==
        TypeExpr::prod(q, q));
  CHECK(typecheck(pi::ccx(), qubits(3)) == qubits(3));
}

TEST_CASE("typecheck failures name the offending subterm") {
  // dist lands in a sum of products; a multiplicative combinator after it
  // needs a product shape and fails
  const TypeExpr dom = TypeExpr::prod(q, TypeExpr::one());
  CHECK_THROWS_WITH_AS(
      typecheck(pi::seq(pi::dist(), pi::swap_t()), dom),
      doctest::Contains("swapT"), TypeCheckError);
  CHECK_THROWS_WITH_AS(
      typecheck(pi::seq(pi::dist(), pi::unitel_t()), dom),
      doctest::Contains("unitelT"), TypeCheckError);
  CHECK_THROWS_AS(typecheck(pi::swap_p(), TypeExpr::prod(q, q)),
                  TypeCheckError);
  CHECK_THROWS_AS(typecheck(pi::factorzr_unannotated(), TypeExpr::zero()),
                  TypeCheckError);
}

TEST_CASE("adjoint swaps the dual rows") {
  CHECK(adjoint(pi::dist()) == pi::factor());
  CHECK(adjoint(pi::factor()) == pi::dist());
  CHECK(adjoint(pi::assocl_p()) == pi::assocr_p());
  CHECK(adjoint(pi::unitel_t()) == pi::unitil_t());
  CHECK(adjoint(pi::swap_p()) == pi::swap_p());
  CHECK(adjoint(pi::absorbl(q)) == pi::factorzr(q));

  const PiTerm s = pi::seq(pi::dist(), pi::factor());
  CHECK(adjoint(s) == pi::seq(pi::dist(), pi::factor()));
  CHECK(adjoint(pi::seq(pi::swap_p(), pi::unitil_p())) ==
        pi::seq(pi::unitel_p(), pi::swap_p()));
}

namespace {

bool inv_free(const PiTerm& c) {
  switch (c.kind()) {
    case PiTerm::Kind::Inv:
      return false;
    case PiTerm::Kind::Seq:
    case PiTerm::Kind::SumC:
    case PiTerm::Kind::ProdC:
      return inv_free(c.fst()) && inv_free(c.snd());
    default:
      return true;
  }
}

}  // namespace

TEST_CASE("adjoint is an involution and inverts typing") {
  // adjoint(inv c) cancels the inv, so the involution is structural on
  // inv-free terms and semantic in general.
  Rng rng(21);
  int structural = 0;
  for (int i = 0; i < 200; ++i) {
    const TypeExpr dom = random_type(rng, 3, 32);
    const PiTerm c = random_pi_term(rng, dom, 1 + (i % 10));
    const TypeExpr cod = typecheck(c, dom);
    CHECK(typecheck(adjoint(c), cod) == dom);
    if (inv_free(c)) {
      CHECK(adjoint(adjoint(c)) == c);
      ++structural;
    } else {
      CHECK(approx_eq(eval_pi(adjoint(adjoint(c)), dom), eval_pi(c, dom), 0)
                .equal);
    }
  }
  CHECK(structural > 50);
}

TEST_CASE("derived constructs match their definitions") {
  CHECK(pi::x() == pi::swap_p());
  CHECK(pi::cx() == pi::ctrl(pi::swap_p()));
  CHECK(pi::ccx() == pi::ctrl(pi::ctrl(pi::swap_p())));
  CHECK(pi::ctrl(pi::x()) ==
        pi::seq(pi::dist(),
                pi::seq(pi::sum_c(pi::id(), pi::prod_c(pi::id(), pi::x())),
                        pi::factor())));
}

TEST_CASE("core term printing uses the surface grammar") {
  CHECK(to_string(pi::seq(pi::swap_p(), pi::id())) == "swapP ; id");
  CHECK(to_string(pi::ccx()) == "ctrl ctrl swapP");
  CHECK(to_string(pi::prod_c(pi::inv(pi::dist()), pi::factorzr(q))) ==
        "inv dist * factorzr[qubit]");
}
