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

#include <Eigen/Core>
#include <memory>
#include <string>

namespace qpi {

// Finite value types: 0, 1, b+b, b*b. Immutable; nodes are shared, so copies
// are cheap and thread-safe.
class TypeExpr {
 public:
  enum class Kind { Zero, One, Sum, Prod };

  static TypeExpr zero();
  static TypeExpr one();
  static TypeExpr sum(const TypeExpr& l, const TypeExpr& r);
  static TypeExpr prod(const TypeExpr& l, const TypeExpr& r);

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_one() const { return kind() == Kind::One; }
  bool is_sum() const { return kind() == Kind::Sum; }
  bool is_prod() const { return kind() == Kind::Prod; }

  // Left/right components of a Sum or Prod.
  TypeExpr left() const;
  TypeExpr right() const;

  // Cardinality of the type; 0 and 1 have dims 0 and 1, + adds, * multiplies.
  Eigen::Index dim() const { return node_->dim; }

  std::string str() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Kind kind;
    Eigen::Index dim;
    std::shared_ptr<const Node> l, r;
  };
  explicit TypeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// The qubit type 1+1; the left injection denotes false = |0>.
TypeExpr qubit();

// Right-nested product of n qubits: q*(q*(...)); n must be >= 1.
TypeExpr qubits(int n);

}  // namespace qpi
