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

#include "qpi/gen.hpp"

#include "qpi/corpus.hpp"

namespace qpi {

TypeExpr random_type(Rng& rng, int max_depth, Eigen::Index max_dim,
                     Eigen::Index min_dim) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    TypeExpr t = [&] {
      auto go = [&](auto&& self, int depth) -> TypeExpr {
        const std::uint64_t pick = rng.below(depth <= 0 ? 3 : 10);
        if (pick == 0) return TypeExpr::zero();
        if (pick <= 2) return depth <= 0 && pick == 1 ? qubit()
                                                      : TypeExpr::one();
        if (pick <= 4) return qubit();
        if (pick <= 7)
          return TypeExpr::sum(self(self, depth - 1), self(self, depth - 1));
        return TypeExpr::prod(self(self, depth - 1), self(self, depth - 1));
      };
      return go(go, max_depth);
    }();
    if (t.dim() >= min_dim && t.dim() <= max_dim) return t;
  }
  return qubit();
}

namespace {

PiTerm random_primitive(Rng& rng, const TypeExpr& d) {
  std::vector<PiTerm> options = {pi::id(), pi::unitil_p(), pi::unitil_t()};
  if (d.is_sum()) {
    options.push_back(pi::swap_p());
    if (d.right().is_sum()) options.push_back(pi::assocl_p());
    if (d.left().is_sum()) options.push_back(pi::assocr_p());
    if (d.left().is_zero()) options.push_back(pi::unitel_p());
    if (d.left().is_prod() && d.right().is_prod() &&
        d.left().right() == d.right().right()) {
      options.push_back(pi::factor());
    }
  }
  if (d.is_prod()) {
    options.push_back(pi::swap_t());
    if (d.right().is_prod()) options.push_back(pi::assocl_t());
    if (d.left().is_prod()) options.push_back(pi::assocr_t());
    if (d.left().is_one()) options.push_back(pi::unitel_t());
    if (d.left().is_sum()) options.push_back(pi::dist());
    if (d.right().is_zero()) options.push_back(pi::absorbl(d.left()));
  }
  if (d.is_zero()) {
    options.push_back(pi::factorzr(qubit()));
    options.push_back(pi::factorzr(TypeExpr::one()));
  }
  return options[rng.below(options.size())];
}

}  // namespace

PiTerm random_pi_term(Rng& rng, const TypeExpr& d, int size) {
  if (size <= 1) return random_primitive(rng, d);
  switch (rng.below(6)) {
    case 0:
    case 1: {
      const PiTerm a = random_pi_term(rng, d, size / 2);
      const PiTerm b = random_pi_term(rng, typecheck(a, d), size - size / 2);
      return pi::seq(a, b);
    }
    case 2:
      if (d.is_sum()) {
        return pi::sum_c(random_pi_term(rng, d.left(), size / 2),
                         random_pi_term(rng, d.right(), size - size / 2));
      }
      return random_pi_term(rng, d, size - 1);
    case 3:
      if (d.is_prod()) {
        return pi::prod_c(random_pi_term(rng, d.left(), size / 2),
                          random_pi_term(rng, d.right(), size - size / 2));
      }
      return random_pi_term(rng, d, size - 1);
    case 4: {
      // inv (adjoint t) typechecks wherever t does.
      const PiTerm t = random_pi_term(rng, d, size - 1);
      return pi::inv(adjoint(t));
    }
    default:
      if (d == qubit() || (d.is_prod() && d.left() == qubit())) {
        // sprinkle in the derived controlled family where it fits
        if (d.is_prod()) {
          const PiTerm body = random_pi_term(rng, d.right(), size - 1);
          if (typecheck(body, d.right()) == d.right()) return pi::ctrl(body);
        }
      }
      return random_pi_term(rng, d, size - 1);
  }
}

AmalgList random_amalg_list(Rng& rng, const TypeExpr& domain, int length,
                            int term_size) {
  std::vector<TaggedTerm> elems;
  TypeExpr cur = domain;
  for (int i = 0; i < length; ++i) {
    const Tag tag = rng.coin() ? Tag::Z : Tag::Phi;
    const PiTerm t =
        random_pi_term(rng, cur, 1 + static_cast<int>(rng.below(
                                         static_cast<std::uint64_t>(
                                             std::max(1, term_size)))));
    elems.push_back({tag, t});
    cur = typecheck(t, cur);
  }
  return AmalgList::make(domain, std::move(elems));
}

namespace {

QpiTerm random_qpi_at(Rng& rng, const TypeExpr& dom, int depth,
                      int& effect_budget) {
  const Gates& g = gates();
  if (depth <= 0) {
    if (dom == qubit()) {
      switch (rng.below(4)) {
        case 0:
          return g.x;
        case 1:
          return g.h;
        case 2:
          if (effect_budget > 0) {
            --effect_budget;
            return g.assert_zero;
          }
          return g.z;
        default:
          return arrow::id();
      }
    }
    if (dom.is_one() && effect_budget > 0 && rng.coin()) {
      --effect_budget;
      return g.zero;
    }
    return arrow::arr(rng.coin()
                          ? pizh::arr_z(random_pi_term(rng, dom, 3))
                          : pizh::arr_phi(random_pi_term(rng, dom, 3)));
  }
  switch (rng.below(5)) {
    case 0: {
      const QpiTerm a = random_qpi_at(rng, dom, depth - 1, effect_budget);
      const TypeExpr mid = typecheck_qpi(a, dom);
      const QpiTerm b = random_qpi_at(rng, mid, depth - 1, effect_budget);
      return arrow::seq(a, b);
    }
    case 1:
      if (dom.is_prod()) {
        return arrow::prod(
            random_qpi_at(rng, dom.left(), depth - 1, effect_budget),
            random_qpi_at(rng, dom.right(), depth - 1, effect_budget));
      }
      return random_qpi_at(rng, dom, depth - 1, effect_budget);
    case 2:
      if (dom.is_prod()) {
        return arrow::first(
            random_qpi_at(rng, dom.left(), depth - 1, effect_budget),
            dom.right());
      }
      return random_qpi_at(rng, dom, depth - 1, effect_budget);
    case 3: {
      // d >>> inv d exercises inversion and stays well-typed at dom. The
      // inverted subterm is kept effect-free so ancilla dimensions do not
      // double through the duplication.
      int no_effects = 0;
      const QpiTerm d = random_qpi_at(rng, dom, depth - 1, no_effects);
      return arrow::seq(d, arrow::inv(d));
    }
    default:
      return random_qpi_at(rng, dom, depth - 1, effect_budget);
  }
}

}  // namespace

QpiTerm random_qpi_term(Rng& rng, TypeExpr& domain_out, int depth) {
  switch (rng.below(4)) {
    case 0:
      domain_out = qubit();
      break;
    case 1:
      domain_out = qubits(2);
      break;
    case 2:
      domain_out = TypeExpr::prod(TypeExpr::one(), qubit());
      break;
    default:
      domain_out = qubits(3);
      break;
  }
  int effect_budget = 3;
  return random_qpi_at(rng, domain_out, depth, effect_budget);
}

}  // namespace qpi
