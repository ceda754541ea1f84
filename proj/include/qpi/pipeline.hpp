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

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "qpi/measure.hpp"
#include "qpi/states.hpp"

namespace qpi {

// A possibly-measured program: reversible-layer terms freely composed with
// the hiding combinators (measurement, discard and the projections). Pure
// subterms denote contractions; anything containing a hiding combinator
// denotes a Kraus map.
class MeasuredTerm {
 public:
  enum class Kind {
    Pure,
    MeasureZ,
    MeasurePhi,
    Discard,
    Fst,
    Snd,
    Seq,
    Prod,
    First,
    Second,
    Inv,
    Ref,
  };

  Kind kind() const;
  MeasuredTerm fst() const;
  MeasuredTerm snd() const;
  MeasuredTerm child() const { return fst(); }
  const QpiTerm& pure_term() const;
  const TypeExpr& spectator() const;
  const std::string& ref_name() const;
  MeasuredTerm ref_target() const;

 private:
  struct Node;
  explicit MeasuredTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct MeasuredFactory;
};

namespace mt {

MeasuredTerm pure(const QpiTerm& d);
MeasuredTerm measure_z();
MeasuredTerm measure_phi();
MeasuredTerm discard();
MeasuredTerm fst();
MeasuredTerm snd();
MeasuredTerm seq(const MeasuredTerm& a, const MeasuredTerm& b);
MeasuredTerm prod(const MeasuredTerm& a, const MeasuredTerm& b);
MeasuredTerm first(const MeasuredTerm& d, const TypeExpr& spectator);
MeasuredTerm second(const MeasuredTerm& d, const TypeExpr& spectator);
// Inversion is only defined on pure terms; checked at typecheck time.
MeasuredTerm inv(const MeasuredTerm& d);
MeasuredTerm ref(const std::string& name, const MeasuredTerm& target);

}  // namespace mt

TypeExpr typecheck_measured(const MeasuredTerm& m, const TypeExpr& domain);

bool is_pure(const MeasuredTerm& m);

// Converts a pure measured term back to the reversible layer (references are
// inlined). Throws ContractError when hiding combinators are present.
QpiTerm to_qpi(const MeasuredTerm& m);

// Compiles to a single Kraus map. Hiding combinators (discard/fst/snd) are
// gated on a totality check of the pure prefix composed since the last
// non-pure stage; `unsafe` skips the gate.
KrausMap compile_pipeline(double phi, const MeasuredTerm& m,
                          const TypeExpr& domain, bool unsafe = false);

struct SampleResult {
  std::map<std::string, std::uint64_t> counts;  // bitstring -> count
  double success_prob = 0.0;
  std::vector<double> probs;  // unnormalized outcome distribution
  int out_bits = 0;
};

// Runs the pipeline on the |input><input| basis state and samples `shots`
// outcomes (deterministically in `seed`). The final type must be a product
// of bits; failed shots (post-selection misses) are counted under "fail".
SampleResult sample(double phi, const MeasuredTerm& m, const TypeExpr& domain,
                    Eigen::Index input, std::uint64_t shots,
                    std::uint64_t seed, bool unsafe = false);

std::string to_string(const MeasuredTerm& m);

}  // namespace qpi
