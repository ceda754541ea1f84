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

#include "oracles.hpp"

#include <cmath>

namespace qpi::oracle {

ValuePtr unit() {
  static const ValuePtr u =
      std::make_shared<const Value>(Value{Value::Kind::Unit, nullptr, nullptr});
  return u;
}
ValuePtr inl(ValuePtr v) {
  return std::make_shared<const Value>(
      Value{Value::Kind::InL, std::move(v), nullptr});
}
ValuePtr inr(ValuePtr v) {
  return std::make_shared<const Value>(
      Value{Value::Kind::InR, std::move(v), nullptr});
}
ValuePtr pair(ValuePtr a, ValuePtr b) {
  return std::make_shared<const Value>(
      Value{Value::Kind::Pair, std::move(a), std::move(b)});
}

std::vector<ValuePtr> enumerate_values(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeExpr::Kind::Zero:
      return {};
    case TypeExpr::Kind::One:
      return {unit()};
    case TypeExpr::Kind::Sum: {
      std::vector<ValuePtr> out;
      for (const ValuePtr& v : enumerate_values(t.left())) out.push_back(inl(v));
      for (const ValuePtr& v : enumerate_values(t.right()))
        out.push_back(inr(v));
      return out;
    }
    case TypeExpr::Kind::Prod: {
      std::vector<ValuePtr> out;
      for (const ValuePtr& a : enumerate_values(t.left())) {
        for (const ValuePtr& b : enumerate_values(t.right()))
          out.push_back(pair(a, b));
      }
      return out;
    }
  }
  throw Error("enumerate_values: unreachable");
}

Eigen::Index value_index(const ValuePtr& v, const TypeExpr& t) {
  switch (t.kind()) {
    case TypeExpr::Kind::One:
      return 0;
    case TypeExpr::Kind::Sum:
      if (v->kind == Value::Kind::InL) return value_index(v->a, t.left());
      return t.left().dim() + value_index(v->a, t.right());
    case TypeExpr::Kind::Prod:
      return value_index(v->a, t.left()) * t.right().dim() +
             value_index(v->b, t.right());
    case TypeExpr::Kind::Zero:
      break;
  }
  throw Error("value_index: value of empty type");
}

ValuePtr apply_pi(const PiTerm& c, const TypeExpr& d, const ValuePtr& v) {
  using K = PiTerm::Kind;
  switch (c.kind()) {
    case K::Id:
      return v;
    case K::SwapP:
      return v->kind == Value::Kind::InL ? inr(v->a) : inl(v->a);
    case K::AssoclP:
      // b1+(b2+b3) -> (b1+b2)+b3
      if (v->kind == Value::Kind::InL) return inl(inl(v->a));
      if (v->a->kind == Value::Kind::InL) return inl(inr(v->a->a));
      return inr(v->a->a);
    case K::AssocrP:
      // (b1+b2)+b3 -> b1+(b2+b3)
      if (v->kind == Value::Kind::InR) return inr(inr(v->a));
      if (v->a->kind == Value::Kind::InL) return inl(v->a->a);
      return inr(inl(v->a->a));
    case K::UnitelP:
      return v->a;  // inr w -> w
    case K::UnitilP:
      return inr(v);
    case K::SwapT:
      return pair(v->b, v->a);
    case K::AssoclT:
      // (a,(b,c)) -> ((a,b),c)
      return pair(pair(v->a, v->b->a), v->b->b);
    case K::AssocrT:
      // ((a,b),c) -> (a,(b,c))
      return pair(v->a->a, pair(v->a->b, v->b));
    case K::UnitelT:
      return v->b;  // ((), w) -> w
    case K::UnitilT:
      return pair(unit(), v);
    case K::Dist:
      // (inl a, c) -> inl (a,c); (inr b, c) -> inr (b,c)
      return v->a->kind == Value::Kind::InL ? inl(pair(v->a->a, v->b))
                                            : inr(pair(v->a->a, v->b));
    case K::Factor:
      return v->kind == Value::Kind::InL
                 ? pair(inl(v->a->a), v->a->b)
                 : pair(inr(v->a->a), v->a->b);
    case K::Absorbl:
    case K::Factorzr:
      throw Error("apply_pi: no values at empty types");
    case K::Seq: {
      const TypeExpr mid = typecheck(c.fst(), d);
      return apply_pi(c.snd(), mid, apply_pi(c.fst(), d, v));
    }
    case K::SumC:
      return v->kind == Value::Kind::InL
                 ? inl(apply_pi(c.fst(), d.left(), v->a))
                 : inr(apply_pi(c.snd(), d.right(), v->a));
    case K::ProdC:
      return pair(apply_pi(c.fst(), d.left(), v->a),
                  apply_pi(c.snd(), d.right(), v->b));
    case K::Inv:
      return apply_pi(adjoint(c.child()), d, v);
  }
  throw Error("apply_pi: unreachable");
}

CMatrix permutation_oracle(const PiTerm& c, const TypeExpr& d) {
  const TypeExpr cod = typecheck(c, d);
  const std::vector<ValuePtr> values = enumerate_values(d);
  CMatrix m = CMatrix::Zero(cod.dim(), d.dim());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const ValuePtr w = apply_pi(c, d, values[j]);
    m(value_index(w, cod), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return m;
}

CMatrix mat_h() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

CMatrix mat_x() {
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

CMatrix gate_at(int n, int pos, const CMatrix& gate) {
  CMatrix acc = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    acc = kron(acc, q == pos ? gate : CMatrix::Identity(2, 2));
  }
  return acc;
}

CMatrix cx_at(int n, int control, int target) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const bool on = (b >> (n - 1 - control)) & 1;
    const Eigen::Index out =
        on ? (b ^ (Eigen::Index(1) << (n - 1 - target))) : b;
    m(out, b) = 1.0;
  }
  return m;
}

CMatrix projective_measure_z(const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < rho.rows(); ++i) out(i, i) = rho(i, i);
  return out;
}

CMatrix partial_trace_second(const CMatrix& rho, Eigen::Index d1,
                             Eigen::Index d2) {
  CMatrix out = CMatrix::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index k = 0; k < d1; ++k) {
      for (Eigen::Index j = 0; j < d2; ++j) {
        out(i, k) += rho(i * d2 + j, k * d2 + j);
      }
    }
  }
  return out;
}

CMatrix partial_trace_first(const CMatrix& rho, Eigen::Index d1,
                            Eigen::Index d2) {
  CMatrix out = CMatrix::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d2; ++j) {
    for (Eigen::Index l = 0; l < d2; ++l) {
      for (Eigen::Index i = 0; i < d1; ++i) {
        out(j, l) += rho(i * d2 + j, i * d2 + l);
      }
    }
  }
  return out;
}

std::array<double, 4> simon_distribution() {
  const CMatrix u = gate_at(4, 1, mat_h()) * gate_at(4, 0, mat_h());
  const CMatrix oracle =
      cx_at(4, 1, 3) * cx_at(4, 1, 2) * cx_at(4, 0, 3) * cx_at(4, 0, 2);
  const CMatrix full =
      gate_at(4, 1, mat_h()) * gate_at(4, 0, mat_h()) * oracle * u;
  CMatrix psi = CMatrix::Zero(16, 1);
  psi(0, 0) = 1.0;
  psi = full * psi;
  std::array<double, 4> dist{0, 0, 0, 0};
  for (Eigen::Index b = 0; b < 16; ++b) {
    dist[static_cast<std::size_t>(b >> 2)] += std::norm(psi(b, 0));
  }
  return dist;
}

double grover_success_dense(int target, int iterations) {
  const CMatrix h3 =
      gate_at(3, 0, mat_h()) * gate_at(3, 1, mat_h()) * gate_at(3, 2, mat_h());
  CMatrix oracle = CMatrix::Identity(8, 8);
  oracle(target, target) = -1.0;
  CMatrix ccz = CMatrix::Identity(8, 8);
  ccz(7, 7) = -1.0;
  const CMatrix x3 =
      gate_at(3, 0, mat_x()) * gate_at(3, 1, mat_x()) * gate_at(3, 2, mat_x());
  const CMatrix amplifier = h3 * x3 * ccz * x3 * h3;

  CMatrix psi = CMatrix::Zero(8, 1);
  psi(0, 0) = 1.0;
  psi = h3 * psi;
  for (int k = 0; k < iterations; ++k) psi = amplifier * oracle * psi;
  return std::norm(psi(target, 0));
}

double grover_success_recurrence(int iterations) {
  const double theta = std::asin(1.0 / std::sqrt(8.0));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

}  // namespace qpi::oracle
