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

#include <vector>

#include "qpi/eval.hpp"
#include "qpi/pi.hpp"
#include "qpi/types.hpp"

namespace qpi {

// One element of an amalgamation: a core term tagged with the sublanguage it
// came from (Z: plain semantics; Phi: rotated semantics).
struct TaggedTerm {
  Tag tag;
  PiTerm term;
};

// A chain-typed list of tagged terms, stored in diagram (execution) order:
// element 0 runs first. The chain of intermediate types is kept alongside.
class AmalgList {
 public:
  // Validates chain-typing; throws TypeCheckError.
  static AmalgList make(const TypeExpr& domain, std::vector<TaggedTerm> elems);

  const TypeExpr& domain() const { return types_.front(); }
  const TypeExpr& cod() const { return types_.back(); }
  const std::vector<TaggedTerm>& elems() const { return elems_; }
  // types()[i] is the domain of element i; types().back() is the codomain.
  const std::vector<TypeExpr>& types() const { return types_; }

 private:
  AmalgList(std::vector<TaggedTerm> elems, std::vector<TypeExpr> types)
      : elems_(std::move(elems)), types_(std::move(types)) {}
  std::vector<TaggedTerm> elems_;
  std::vector<TypeExpr> types_;
};

// Arrow-layer terms over the two tagged copies. The multiplicative
// coherences live at this layer too; they desugar to Z-tagged core terms
// (unite/uniti are the right unitor b*1 <-> b, built from swapT and the core
// left unitor).
class PizhTerm {
 public:
  enum class Kind {
    ArrZ,
    ArrPhi,
    Seq,
    First,
    Second,
    Prod,
    Inv,
    Id,
    SwapT,
    AssoclT,
    AssocrT,
    UniteT,
    UnitiT,
  };

  Kind kind() const;
  PizhTerm fst() const;
  PizhTerm snd() const;
  PizhTerm child() const { return fst(); }
  const PiTerm& payload() const;          // ArrZ / ArrPhi
  const TypeExpr& spectator() const;      // First / Second

 private:
  struct Node;
  explicit PizhTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct PizhFactory;
};

namespace pizh {

PizhTerm arr_z(const PiTerm& c);
PizhTerm arr_phi(const PiTerm& c);
PizhTerm seq(const PizhTerm& a, const PizhTerm& b);
// first d : b1*s <-> b2*s; the spectator s is the untouched right factor.
PizhTerm first(const PizhTerm& d, const TypeExpr& spectator);
// second d : s*b1 <-> s*b2; the spectator s is the untouched left factor.
PizhTerm second(const PizhTerm& d, const TypeExpr& spectator);
PizhTerm prod(const PizhTerm& a, const PizhTerm& b);
PizhTerm inv(const PizhTerm& d);
PizhTerm id();
PizhTerm swap_t();
PizhTerm assocl_t();
PizhTerm assocr_t();
PizhTerm unite_t();   // b*1 <-> b
PizhTerm uniti_t();   // b <-> b*1

}  // namespace pizh

// Structural inverse, mirroring the core adjoint.
PizhTerm pizh_adjoint(const PizhTerm& d);

// Desugars to the tagged-list normal form: arr builds singletons, seq
// concatenates, first maps (. * id) over elements preserving tags, second
// and prod go through swapT/first, inv reverses and adjoints elementwise.
AmalgList to_list(const PizhTerm& d, const TypeExpr& domain);

TypeExpr typecheck_pizh(const PizhTerm& d, const TypeExpr& domain);

struct NormalizeOptions {
  // When set, elements whose tagged evaluation is approximately the identity
  // are removed as well (the procedure itself is syntactic).
  bool semantic_identities = false;
  double phi = 0.0;
  double tol = 1e-10;
};

// Fixpoint of: drop syntactic identities, fuse adjacent equal-tag elements.
// Each step shortens the list, so this terminates.
AmalgList normalize(const AmalgList& m, const NormalizeOptions& opts = {});

// Product of the tagged evaluations in diagram order (later elements multiply
// on the left); the empty list is the identity on the domain.
CMatrix eval_pizh(double phi, const AmalgList& m);
CMatrix eval_pizh(double phi, const PizhTerm& d, const TypeExpr& domain);

std::string to_string(const PizhTerm& d);

}  // namespace qpi
