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

#include "qpi/pipeline.hpp"

#include <algorithm>

#include "qpi/rng.hpp"

namespace qpi {

struct MeasuredTerm::Node {
  Kind kind;
  std::shared_ptr<const Node> a, b;
  std::optional<QpiTerm> pure;
  std::optional<TypeExpr> spectator;
  std::string name;
};

struct MeasuredFactory {
  using K = MeasuredTerm::Kind;
  static MeasuredTerm make(MeasuredTerm::Node n) {
    return MeasuredTerm(
        std::make_shared<const MeasuredTerm::Node>(std::move(n)));
  }
  static MeasuredTerm leaf(K k) {
    return make({k, nullptr, nullptr, std::nullopt, std::nullopt, {}});
  }
  static MeasuredTerm pure(const QpiTerm& d) {
    return make({K::Pure, nullptr, nullptr, d, std::nullopt, {}});
  }
  static MeasuredTerm binary(K k, const MeasuredTerm& a,
                             const MeasuredTerm& b) {
    return make({k, a.node_, b.node_, std::nullopt, std::nullopt, {}});
  }
  static MeasuredTerm unary(K k, const MeasuredTerm& a,
                            std::optional<TypeExpr> spectator) {
    return make({k, a.node_, nullptr, std::nullopt, std::move(spectator), {}});
  }
  static MeasuredTerm make_ref(const std::string& name,
                               const MeasuredTerm& target) {
    return make({K::Ref, target.node_, nullptr, std::nullopt, std::nullopt,
                 name});
  }
};

MeasuredTerm::Kind MeasuredTerm::kind() const { return node_->kind; }

MeasuredTerm MeasuredTerm::fst() const {
  if (!node_->a) throw Error("MeasuredTerm: no child");
  return MeasuredTerm(node_->a);
}

MeasuredTerm MeasuredTerm::snd() const {
  if (!node_->b) throw Error("MeasuredTerm: no second child");
  return MeasuredTerm(node_->b);
}

const QpiTerm& MeasuredTerm::pure_term() const {
  if (!node_->pure) throw Error("MeasuredTerm: not a pure leaf");
  return *node_->pure;
}

const TypeExpr& MeasuredTerm::spectator() const {
  if (!node_->spectator) throw Error("MeasuredTerm: no spectator");
  return *node_->spectator;
}

const std::string& MeasuredTerm::ref_name() const { return node_->name; }

MeasuredTerm MeasuredTerm::ref_target() const {
  if (kind() != Kind::Ref || !node_->a)
    throw Error("MeasuredTerm: not a reference");
  return MeasuredTerm(node_->a);
}

namespace mt {

using K = MeasuredTerm::Kind;

MeasuredTerm pure(const QpiTerm& d) { return MeasuredFactory::pure(d); }
MeasuredTerm measure_z() { return MeasuredFactory::leaf(K::MeasureZ); }
MeasuredTerm measure_phi() { return MeasuredFactory::leaf(K::MeasurePhi); }
MeasuredTerm discard() { return MeasuredFactory::leaf(K::Discard); }
MeasuredTerm fst() { return MeasuredFactory::leaf(K::Fst); }
MeasuredTerm snd() { return MeasuredFactory::leaf(K::Snd); }
MeasuredTerm seq(const MeasuredTerm& a, const MeasuredTerm& b) {
  return MeasuredFactory::binary(K::Seq, a, b);
}
MeasuredTerm prod(const MeasuredTerm& a, const MeasuredTerm& b) {
  return MeasuredFactory::binary(K::Prod, a, b);
}
MeasuredTerm first(const MeasuredTerm& d, const TypeExpr& spectator) {
  return MeasuredFactory::unary(K::First, d, spectator);
}
MeasuredTerm second(const MeasuredTerm& d, const TypeExpr& spectator) {
  return MeasuredFactory::unary(K::Second, d, spectator);
}
MeasuredTerm inv(const MeasuredTerm& d) {
  return MeasuredFactory::unary(K::Inv, d, std::nullopt);
}
MeasuredTerm ref(const std::string& name, const MeasuredTerm& target) {
  return MeasuredFactory::make_ref(name, target);
}

}  // namespace mt

TypeExpr typecheck_measured(const MeasuredTerm& m, const TypeExpr& dom) {
  using K = MeasuredTerm::Kind;
  switch (m.kind()) {
    case K::Pure:
      return typecheck_qpi(m.pure_term(), dom);
    case K::MeasureZ:
    case K::MeasurePhi:
      if (dom != qubit())
        throw TypeCheckError("measurement expects domain 1+1, got " +
                             dom.str());
      return dom;
    case K::Discard:
      if (dom.dim() < 1)
        throw TypeCheckError("discard expects an inhabited type, got " +
                             dom.str());
      return TypeExpr::one();
    case K::Fst:
      if (!dom.is_prod())
        throw TypeCheckError("fst expects a product domain, got " + dom.str());
      if (dom.right().dim() < 1)
        throw TypeCheckError("fst: discarded factor must be inhabited");
      return dom.left();
    case K::Snd:
      if (!dom.is_prod())
        throw TypeCheckError("snd expects a product domain, got " + dom.str());
      if (dom.left().dim() < 1)
        throw TypeCheckError("snd: discarded factor must be inhabited");
      return dom.right();
    case K::Seq: {
      const TypeExpr mid = typecheck_measured(m.fst(), dom);
      return typecheck_measured(m.snd(), mid);
    }
    case K::Prod: {
      if (!dom.is_prod())
        throw TypeCheckError("*** expects a product domain, got " + dom.str());
      return TypeExpr::prod(typecheck_measured(m.fst(), dom.left()),
                            typecheck_measured(m.snd(), dom.right()));
    }
    case K::First: {
      if (!dom.is_prod() || dom.right() != m.spectator())
        throw TypeCheckError("first: expected domain b*" +
                             m.spectator().str() + ", got " + dom.str());
      return TypeExpr::prod(typecheck_measured(m.child(), dom.left()),
                            dom.right());
    }
    case K::Second: {
      if (!dom.is_prod() || dom.left() != m.spectator())
        throw TypeCheckError("second: expected domain " + m.spectator().str() +
                             "*b, got " + dom.str());
      return TypeExpr::prod(dom.left(),
                            typecheck_measured(m.child(), dom.right()));
    }
    case K::Inv: {
      if (!is_pure(m.child()))
        throw ContractError("inv: cannot invert a measured term");
      return typecheck_qpi(arrow::inv(to_qpi(m.child())), dom);
    }
    case K::Ref:
      return typecheck_measured(m.ref_target(), dom);
  }
  throw Error("typecheck_measured: unreachable");
}

bool is_pure(const MeasuredTerm& m) {
  using K = MeasuredTerm::Kind;
  switch (m.kind()) {
    case K::Pure:
      return true;
    case K::MeasureZ:
    case K::MeasurePhi:
    case K::Discard:
    case K::Fst:
    case K::Snd:
      return false;
    case K::Seq:
    case K::Prod:
      return is_pure(m.fst()) && is_pure(m.snd());
    case K::First:
    case K::Second:
    case K::Inv:
      return is_pure(m.child());
    case K::Ref:
      return is_pure(m.ref_target());
  }
  throw Error("is_pure: unreachable");
}

QpiTerm to_qpi(const MeasuredTerm& m) {
  using K = MeasuredTerm::Kind;
  switch (m.kind()) {
    case K::Pure:
      return m.pure_term();
    case K::Seq:
      return arrow::seq(to_qpi(m.fst()), to_qpi(m.snd()));
    case K::Prod:
      return arrow::prod(to_qpi(m.fst()), to_qpi(m.snd()));
    case K::First:
      return arrow::first(to_qpi(m.child()), m.spectator());
    case K::Second:
      return arrow::second(to_qpi(m.child()), m.spectator());
    case K::Inv:
      return arrow::inv(to_qpi(m.child()));
    case K::Ref:
      return to_qpi(m.ref_target());
    default:
      throw ContractError(
          "term contains measurement combinators; it has no reversible-layer "
          "denotation");
  }
}

namespace {

void flatten_seq(const MeasuredTerm& m, std::vector<MeasuredTerm>& out) {
  if (m.kind() == MeasuredTerm::Kind::Seq) {
    flatten_seq(m.fst(), out);
    flatten_seq(m.snd(), out);
  } else if (m.kind() == MeasuredTerm::Kind::Ref) {
    flatten_seq(m.ref_target(), out);
  } else {
    out.push_back(m);
  }
}

bool is_hiding(MeasuredTerm::Kind k) {
  return k == MeasuredTerm::Kind::Discard || k == MeasuredTerm::Kind::Fst ||
         k == MeasuredTerm::Kind::Snd;
}

KrausMap compile_stage(double phi, const MeasuredTerm& m, const TypeExpr& dom,
                       bool unsafe) {
  using K = MeasuredTerm::Kind;
  switch (m.kind()) {
    case K::Pure:
      return lift_contraction(eval_qpi(phi, m.pure_term(), dom));
    case K::MeasureZ:
      typecheck_measured(m, dom);
      return measure_z();
    case K::MeasurePhi:
      typecheck_measured(m, dom);
      return measure_phi(phi);
    case K::Discard:
      typecheck_measured(m, dom);
      return discard(dom);
    case K::Fst:
      typecheck_measured(m, dom);
      return fst(dom.left(), dom.right());
    case K::Snd:
      typecheck_measured(m, dom);
      return snd(dom.left(), dom.right());
    case K::Prod:
      typecheck_measured(m, dom);
      return tensor(compile_pipeline(phi, m.fst(), dom.left(), unsafe),
                    compile_pipeline(phi, m.snd(), dom.right(), unsafe));
    case K::First:
      typecheck_measured(m, dom);
      return tensor(compile_pipeline(phi, m.child(), dom.left(), unsafe),
                    identity_channel(dom.right().dim()));
    case K::Second:
      typecheck_measured(m, dom);
      return tensor(identity_channel(dom.left().dim()),
                    compile_pipeline(phi, m.child(), dom.right(), unsafe));
    case K::Inv:
      return lift_contraction(eval_qpi(phi, to_qpi(m), dom));
    case K::Seq:
    case K::Ref:
      throw Error("compile_stage: composite stage");
  }
  throw Error("compile_stage: unreachable");
}

}  // namespace

KrausMap compile_pipeline(double phi, const MeasuredTerm& m,
                          const TypeExpr& domain, bool unsafe) {
  std::vector<MeasuredTerm> stages;
  flatten_seq(m, stages);

  KrausMap acc = identity_channel(domain.dim());
  TypeExpr cur = domain;
  std::optional<QpiTerm> pending;
  TypeExpr pending_dom = domain;

  auto flush = [&]() {
    if (!pending) return;
    acc = compose(acc, lift_contraction(eval_qpi(phi, *pending, pending_dom)));
    pending.reset();
  };

  for (const MeasuredTerm& stage : stages) {
    if (is_pure(stage)) {
      const QpiTerm q = to_qpi(stage);
      if (!pending) {
        pending = q;
        pending_dom = cur;
      } else {
        pending = arrow::seq(*pending, q);
      }
      cur = typecheck_measured(stage, cur);
      continue;
    }
    // The hiding postulate is only sound after total maps: refuse to discard
    // the output of a non-total pure prefix unless overridden.
    if (is_hiding(stage.kind()) && pending && !unsafe &&
        !totality_check(phi, *pending, pending_dom)) {
      throw ContractError(
          "discard/fst/snd after a non-total stage; pass --unsafe to "
          "override");
    }
    flush();
    acc = compose(acc, compile_stage(phi, stage, cur, unsafe));
    cur = typecheck_measured(stage, cur);
  }
  flush();
  return acc;
}

namespace {

// Bit width of a product-of-bits type; throws for anything else.
int bits_of(const TypeExpr& t) {
  if (t.is_one()) return 0;
  if (t == qubit()) return 1;
  if (t.is_prod()) return bits_of(t.left()) + bits_of(t.right());
  throw ContractError("output type is not a product of bits: " + t.str());
}

std::string bitstring(Eigen::Index value, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i) {
    if ((value >> (bits - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace

SampleResult sample(double phi, const MeasuredTerm& m, const TypeExpr& domain,
                    Eigen::Index input, std::uint64_t shots,
                    std::uint64_t seed, bool unsafe) {
  const TypeExpr out_type = typecheck_measured(m, domain);
  const int bits = bits_of(out_type);

  const KrausMap k = compile_pipeline(phi, m, domain, unsafe);
  const DensityMatrix rho0 = DensityMatrix::basis_state(domain.dim(), input);
  const DensityMatrix rho = apply(k, rho0);

  SampleResult res;
  res.out_bits = bits;
  res.probs.resize(static_cast<std::size_t>(rho.dim()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double p = std::max(rho.mat()(i, i).real(), 0.0);
    res.probs[static_cast<std::size_t>(i)] = p;
    total += p;
  }
  res.success_prob = total;

  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = shot_u01(seed, s);
    double cum = 0.0;
    Eigen::Index outcome = -1;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
      cum += res.probs[static_cast<std::size_t>(i)];
      if (u < cum) {
        outcome = i;
        break;
      }
    }
    if (outcome < 0) {
      ++res.counts["fail"];
    } else {
      ++res.counts[bitstring(outcome, bits)];
    }
  }
  return res;
}

namespace {

void render_mt(const MeasuredTerm& m, std::string& out, int parent_prec) {
  using K = MeasuredTerm::Kind;
  switch (m.kind()) {
    case K::Ref:
      out += m.ref_name();
      return;
    case K::Pure: {
      const auto qk = m.pure_term().kind();
      const bool need =
          (qk == QpiTerm::Kind::Seq && parent_prec > 1) ||
          (qk == QpiTerm::Kind::Prod && parent_prec > 2);
      if (need) out += '(';
      out += to_string(m.pure_term());
      if (need) out += ')';
      return;
    }
    case K::MeasureZ: out += "measureZ"; return;
    case K::MeasurePhi: out += "measureP"; return;
    case K::Discard: out += "discard"; return;
    case K::Fst: out += "fst"; return;
    case K::Snd: out += "snd"; return;
    case K::Seq: {
      const bool need = parent_prec > 1;
      if (need) out += '(';
      render_mt(m.fst(), out, 1);
      out += " >>> ";
      render_mt(m.snd(), out, 2);
      if (need) out += ')';
      return;
    }
    case K::Prod: {
      const bool need = parent_prec > 2;
      if (need) out += '(';
      render_mt(m.fst(), out, 2);
      out += " *** ";
      render_mt(m.snd(), out, 3);
      if (need) out += ')';
      return;
    }
    case K::First:
      out += "first[" + m.spectator().str() + "] ";
      render_mt(m.child(), out, 3);
      return;
    case K::Second:
      out += "second[" + m.spectator().str() + "] ";
      render_mt(m.child(), out, 3);
      return;
    case K::Inv:
      out += "inv ";
      render_mt(m.child(), out, 3);
      return;
  }
}

}  // namespace

std::string to_string(const MeasuredTerm& m) {
  std::string out;
  render_mt(m, out, 0);
  return out;
}

}  // namespace qpi
