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

#include "qpi/amalgam.hpp"

namespace qpi {

struct PizhTerm::Node {
  Kind kind;
  std::shared_ptr<const Node> a, b;
  std::optional<PiTerm> payload;
  std::optional<TypeExpr> spectator;
};

struct PizhFactory {
  static PizhTerm prim(PizhTerm::Kind k) {
    return PizhTerm(std::make_shared<const PizhTerm::Node>(
        PizhTerm::Node{k, nullptr, nullptr, std::nullopt, std::nullopt}));
  }
  static PizhTerm lift(PizhTerm::Kind k, const PiTerm& c) {
    return PizhTerm(std::make_shared<const PizhTerm::Node>(
        PizhTerm::Node{k, nullptr, nullptr, c, std::nullopt}));
  }
  static PizhTerm binary(PizhTerm::Kind k, const PizhTerm& a,
                         const PizhTerm& b) {
    return PizhTerm(std::make_shared<const PizhTerm::Node>(
        PizhTerm::Node{k, a.node_, b.node_, std::nullopt, std::nullopt}));
  }
  static PizhTerm unary(PizhTerm::Kind k, const PizhTerm& a,
                        std::optional<TypeExpr> spectator) {
    return PizhTerm(std::make_shared<const PizhTerm::Node>(PizhTerm::Node{
        k, a.node_, nullptr, std::nullopt, std::move(spectator)}));
  }
};

PizhTerm::Kind PizhTerm::kind() const { return node_->kind; }

PizhTerm PizhTerm::fst() const {
  if (!node_->a) throw Error("PizhTerm: no child");
  return PizhTerm(node_->a);
}

PizhTerm PizhTerm::snd() const {
  if (!node_->b) throw Error("PizhTerm: no second child");
  return PizhTerm(node_->b);
}

const PiTerm& PizhTerm::payload() const {
  if (!node_->payload) throw Error("PizhTerm: no payload");
  return *node_->payload;
}

const TypeExpr& PizhTerm::spectator() const {
  if (!node_->spectator) throw Error("PizhTerm: no spectator type");
  return *node_->spectator;
}

namespace pizh {

using K = PizhTerm::Kind;

PizhTerm arr_z(const PiTerm& c) { return PizhFactory::lift(K::ArrZ, c); }
PizhTerm arr_phi(const PiTerm& c) { return PizhFactory::lift(K::ArrPhi, c); }
PizhTerm seq(const PizhTerm& a, const PizhTerm& b) {
  return PizhFactory::binary(K::Seq, a, b);
}
PizhTerm first(const PizhTerm& d, const TypeExpr& spectator) {
  return PizhFactory::unary(K::First, d, spectator);
}
PizhTerm second(const PizhTerm& d, const TypeExpr& spectator) {
  return PizhFactory::unary(K::Second, d, spectator);
}
PizhTerm prod(const PizhTerm& a, const PizhTerm& b) {
  return PizhFactory::binary(K::Prod, a, b);
}
PizhTerm inv(const PizhTerm& d) {
  return PizhFactory::unary(K::Inv, d, std::nullopt);
}
PizhTerm id() { return PizhFactory::prim(K::Id); }
PizhTerm swap_t() { return PizhFactory::prim(K::SwapT); }
PizhTerm assocl_t() { return PizhFactory::prim(K::AssoclT); }
PizhTerm assocr_t() { return PizhFactory::prim(K::AssocrT); }
PizhTerm unite_t() { return PizhFactory::prim(K::UniteT); }
PizhTerm uniti_t() { return PizhFactory::prim(K::UnitiT); }

}  // namespace pizh

PizhTerm pizh_adjoint(const PizhTerm& d) {
  using K = PizhTerm::Kind;
  switch (d.kind()) {
    case K::ArrZ:
      return pizh::arr_z(adjoint(d.payload()));
    case K::ArrPhi:
      return pizh::arr_phi(adjoint(d.payload()));
    case K::Seq:
      return pizh::seq(pizh_adjoint(d.snd()), pizh_adjoint(d.fst()));
    case K::First:
      return pizh::first(pizh_adjoint(d.child()), d.spectator());
    case K::Second:
      return pizh::second(pizh_adjoint(d.child()), d.spectator());
    case K::Prod:
      return pizh::prod(pizh_adjoint(d.fst()), pizh_adjoint(d.snd()));
    case K::Inv:
      return d.child();
    case K::Id:
    case K::SwapT:
      return d;
    case K::AssoclT:
      return pizh::assocr_t();
    case K::AssocrT:
      return pizh::assocl_t();
    case K::UniteT:
      return pizh::uniti_t();
    case K::UnitiT:
      return pizh::unite_t();
  }
  throw Error("pizh_adjoint: unreachable");
}

namespace {

// Core realizations of the arrow-layer multiplicative coherences, all lifted
// through the Z tag.
PiTerm coherence_core(PizhTerm::Kind k) {
  using K = PizhTerm::Kind;
  switch (k) {
    case K::SwapT:
      return pi::swap_t();
    case K::AssoclT:
      return pi::assocl_t();
    case K::AssocrT:
      return pi::assocr_t();
    case K::UniteT:
      // b*1 -> 1*b -> b
      return pi::seq(pi::swap_t(), pi::unitel_t());
    case K::UnitiT:
      // b -> 1*b -> b*1
      return pi::seq(pi::unitil_t(), pi::swap_t());
    default:
      throw Error("coherence_core: not a coherence");
  }
}

void build_list(const PizhTerm& d, const TypeExpr& dom,
                std::vector<TaggedTerm>& out, TypeExpr& cod) {
  using K = PizhTerm::Kind;
  switch (d.kind()) {
    case K::ArrZ: {
      cod = typecheck(d.payload(), dom);
      out.push_back({Tag::Z, d.payload()});
      return;
    }
    case K::ArrPhi: {
      cod = typecheck(d.payload(), dom);
      out.push_back({Tag::Phi, d.payload()});
      return;
    }
    case K::Id:
      cod = dom;
      return;
    case K::SwapT:
    case K::AssoclT:
    case K::AssocrT:
    case K::UniteT:
    case K::UnitiT: {
      const PiTerm c = coherence_core(d.kind());
      cod = typecheck(c, dom);
      out.push_back({Tag::Z, c});
      return;
    }
    case K::Seq: {
      TypeExpr mid = dom;
      build_list(d.fst(), dom, out, mid);
      build_list(d.snd(), mid, out, cod);
      return;
    }
    case K::First: {
      if (!dom.is_prod() || dom.right() != d.spectator()) {
        throw TypeCheckError("type error at `first`: expected domain b*" +
                             d.spectator().str() + ", got " + dom.str());
      }
      std::vector<TaggedTerm> sub;
      TypeExpr sub_cod = dom.left();
      build_list(d.child(), dom.left(), sub, sub_cod);
      for (const TaggedTerm& e : sub) {
        out.push_back({e.tag, pi::prod_c(e.term, pi::id())});
      }
      cod = TypeExpr::prod(sub_cod, dom.right());
      return;
    }
    case K::Second: {
      if (!dom.is_prod() || dom.left() != d.spectator()) {
        throw TypeCheckError("type error at `second`: expected domain " +
                             d.spectator().str() + "*b, got " + dom.str());
      }
      // second = swapT >>> first >>> swapT
      const PizhTerm desugared = pizh::seq(
          pizh::swap_t(),
          pizh::seq(pizh::first(d.child(), d.spectator()), pizh::swap_t()));
      build_list(desugared, dom, out, cod);
      return;
    }
    case K::Prod: {
      if (!dom.is_prod()) {
        throw TypeCheckError(
            "type error at `***`: expected a product domain, got " +
            dom.str());
      }
      // xs *** ys = first xs >>> second ys
      const TypeExpr cod1 = typecheck_pizh(d.fst(), dom.left());
      const PizhTerm desugared =
          pizh::seq(pizh::first(d.fst(), dom.right()),
                    pizh::second(d.snd(), cod1));
      build_list(desugared, dom, out, cod);
      return;
    }
    case K::Inv:
      build_list(pizh_adjoint(d.child()), dom, out, cod);
      return;
  }
  throw Error("to_list: unreachable");
}

}  // namespace

AmalgList AmalgList::make(const TypeExpr& domain,
                          std::vector<TaggedTerm> elems) {
  std::vector<TypeExpr> types;
  types.reserve(elems.size() + 1);
  types.push_back(domain);
  for (const TaggedTerm& e : elems) {
    types.push_back(typecheck(e.term, types.back()));
  }
  return AmalgList(std::move(elems), std::move(types));
}

AmalgList to_list(const PizhTerm& d, const TypeExpr& domain) {
  std::vector<TaggedTerm> elems;
  TypeExpr cod = domain;
  build_list(d, domain, elems, cod);
  return AmalgList::make(domain, std::move(elems));
}

TypeExpr typecheck_pizh(const PizhTerm& d, const TypeExpr& domain) {
  // The list construction performs exactly the forward type derivation.
  std::vector<TaggedTerm> elems;
  TypeExpr cod = domain;
  build_list(d, domain, elems, cod);
  return cod;
}

AmalgList normalize(const AmalgList& m, const NormalizeOptions& opts) {
  std::vector<TaggedTerm> cur = m.elems();
  std::vector<TypeExpr> doms(m.types().begin(), m.types().end() - 1);

  bool changed = true;
  while (changed) {
    changed = false;

    // Step 1: remove identities.
    std::vector<TaggedTerm> kept;
    std::vector<TypeExpr> kept_doms;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      bool is_id = cur[i].term.kind() == PiTerm::Kind::Id;
      if (!is_id && opts.semantic_identities) {
        const CMatrix u =
            eval_tagged(opts.phi, cur[i].tag, cur[i].term, doms[i]);
        if (u.rows() == u.cols() &&
            approx_eq(u, identity(u.rows()), opts.tol).equal) {
          is_id = true;
        }
      }
      if (is_id) {
        changed = true;
      } else {
        kept.push_back(cur[i]);
        kept_doms.push_back(doms[i]);
      }
    }

    // Step 2: fuse adjacent equal-tag elements; the earlier element becomes
    // the first leg of the fused sequence.
    std::vector<TaggedTerm> fused;
    std::vector<TypeExpr> fused_doms;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!fused.empty() && fused.back().tag == kept[i].tag) {
        fused.back().term = pi::seq(fused.back().term, kept[i].term);
        changed = true;
      } else {
        fused.push_back(kept[i]);
        fused_doms.push_back(kept_doms[i]);
      }
    }
    cur = std::move(fused);
    doms = std::move(fused_doms);
  }
  return AmalgList::make(m.domain(), std::move(cur));
}

CMatrix eval_pizh(double phi, const AmalgList& m) {
  CMatrix acc = identity(m.domain().dim());
  for (std::size_t i = 0; i < m.elems().size(); ++i) {
    acc = eval_tagged(phi, m.elems()[i].tag, m.elems()[i].term, m.types()[i]) *
          acc;
  }
  return acc;
}

CMatrix eval_pizh(double phi, const PizhTerm& d, const TypeExpr& domain) {
  return eval_pizh(phi, to_list(d, domain));
}

namespace {

// Precedence: '>>>' (1) < '***' (2) < unary (3).
void render_pizh(const PizhTerm& d, std::string& out, int parent_prec) {
  using K = PizhTerm::Kind;
  switch (d.kind()) {
    case K::ArrZ:
    case K::ArrPhi: {
      out += d.kind() == K::ArrZ ? "arrZ " : "arrP ";
      const bool bare = d.payload().is_primitive();
      if (!bare) out += '(';
      out += to_string(d.payload());
      if (!bare) out += ')';
      return;
    }
    case K::Id: out += "id"; return;
    case K::SwapT: out += "swapT"; return;
    case K::AssoclT: out += "assoclT"; return;
    case K::AssocrT: out += "assocrT"; return;
    case K::UniteT: out += "unitelT"; return;
    case K::UnitiT: out += "unitilT"; return;
    case K::Seq: {
      const bool need = parent_prec > 1;
      if (need) out += '(';
      render_pizh(d.fst(), out, 1);
      out += " >>> ";
      render_pizh(d.snd(), out, 2);
      if (need) out += ')';
      return;
    }
    case K::Prod: {
      const bool need = parent_prec > 2;
      if (need) out += '(';
      render_pizh(d.fst(), out, 2);
      out += " *** ";
      render_pizh(d.snd(), out, 3);
      if (need) out += ')';
      return;
    }
    case K::First:
      out += "first[" + d.spectator().str() + "] ";
      render_pizh(d.child(), out, 3);
      return;
    case K::Second:
      out += "second[" + d.spectator().str() + "] ";
      render_pizh(d.child(), out, 3);
      return;
    case K::Inv:
      out += "inv ";
      render_pizh(d.child(), out, 3);
      return;
  }
}

}  // namespace

std::string to_string(const PizhTerm& d) {
  std::string out;
  render_pizh(d, out, 0);
  return out;
}

}  // namespace qpi
