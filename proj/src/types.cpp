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

#include "qpi/types.hpp"

#include <cassert>

#include "qpi/linalg.hpp"

namespace qpi {

TypeExpr TypeExpr::zero() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::Zero, 0, nullptr, nullptr});
  return TypeExpr(n);
}

TypeExpr TypeExpr::one() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::One, 1, nullptr, nullptr});
  return TypeExpr(n);
}

TypeExpr TypeExpr::sum(const TypeExpr& l, const TypeExpr& r) {
  return TypeExpr(std::make_shared<const Node>(
      Node{Kind::Sum, l.dim() + r.dim(), l.node_, r.node_}));
}

TypeExpr TypeExpr::prod(const TypeExpr& l, const TypeExpr& r) {
  return TypeExpr(std::make_shared<const Node>(
      Node{Kind::Prod, l.dim() * r.dim(), l.node_, r.node_}));
}

TypeExpr TypeExpr::left() const {
  if (!node_->l) throw Error("TypeExpr::left on atomic type");
  return TypeExpr(node_->l);
}

TypeExpr TypeExpr::right() const {
  if (!node_->r) throw Error("TypeExpr::right on atomic type");
  return TypeExpr(node_->r);
}

namespace {

void render(const TypeExpr& t, std::string& out, int parent_prec) {
  // Precedence: * (2) binds over + (1); both printed left-associatively.
  switch (t.kind()) {
    case TypeExpr::Kind::Zero:
      out += '0';
      return;
    case TypeExpr::Kind::One:
      out += '1';
      return;
    case TypeExpr::Kind::Sum: {
      if (t.left().is_one() && t.right().is_one()) {
        out += "qubit";
        return;
      }
      const bool need = parent_prec > 1;
      if (need) out += '(';
      render(t.left(), out, 1);
      out += '+';
      render(t.right(), out, 2);
      if (need) out += ')';
      return;
    }
    case TypeExpr::Kind::Prod: {
      const bool need = parent_prec > 2;
      if (need) out += '(';
      render(t.left(), out, 2);
      out += '*';
      render(t.right(), out, 3);
      if (need) out += ')';
      return;
    }
  }
}

}  // namespace

std::string TypeExpr::str() const {
  std::string out;
  render(*this, out, 0);
  return out;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case TypeExpr::Kind::Zero:
    case TypeExpr::Kind::One:
      return true;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

TypeExpr qubit() {
  static const TypeExpr q = TypeExpr::sum(TypeExpr::one(), TypeExpr::one());
  return q;
}

TypeExpr qubits(int n) {
  assert(n >= 1);
  TypeExpr t = qubit();
  for (int i = 1; i < n; ++i) t = TypeExpr::prod(qubit(), t);
  return t;
}

}  // namespace qpi
