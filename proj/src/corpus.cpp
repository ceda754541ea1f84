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

#include "qpi/corpus.hpp"

namespace qpi {

namespace {

QpiTerm seq3(const QpiTerm& a, const QpiTerm& b, const QpiTerm& c) {
  return arrow::seq(a, arrow::seq(b, c));
}

Gates build_gates() {
  using namespace arrow;
  Gates g{
      /*x=*/arr(pizh::arr_z(pi::x())),
      /*h=*/arr(pizh::arr_phi(pi::x())),
      /*z=*/id(),  // placeholder, filled below
      /*cx=*/arr(pizh::arr_z(pi::cx())),
      /*cz=*/id(),
      /*ccx=*/arr(pizh::arr_z(pi::ccx())),
      /*ccz=*/id(),
      /*zero=*/zero(),
      /*one=*/id(),
      /*plus=*/id(),
      /*minus=*/id(),
      /*assert_zero=*/assert_zero(),
      /*assert_one=*/id(),
      /*copy_z=*/id(),
      /*copy_x=*/id(),
      /*ctrl_s=*/id(),
      /*amplifier3=*/id(),
  };
  g.z = seq3(g.h, g.x, g.h);
  g.cz = seq3(prod(id(), g.h), g.cx, prod(id(), g.h));
  g.ccz = seq3(prod(id(), prod(id(), g.h)), g.ccx,
               prod(id(), prod(id(), g.h)));
  g.one = seq(g.zero, g.x);
  g.plus = seq(g.zero, g.h);
  g.minus = seq(g.one, g.h);
  g.assert_one = seq(g.x, g.assert_zero);
  g.copy_z = seq3(uniti_t(), prod(id(), g.zero), g.cx);
  g.copy_x = seq3(g.h, g.copy_z, prod(g.h, g.h));
  // controlled-S through the real encoding: S = diag(1,i) becomes Z then X
  // on the encoding qubit, so CC(S) = ccz then ccx.
  g.ctrl_s = seq(g.ccz, g.ccx);
  const QpiTerm h3 = prod(g.h, prod(g.h, g.h));
  const QpiTerm x3 = prod(g.x, prod(g.x, g.x));
  g.amplifier3 = seq(h3, seq3(x3, g.ccz, seq(x3, h3)));
  return g;
}

}  // namespace

const Gates& gates() {
  static const Gates g = build_gates();
  return g;
}

QpiTerm grover_oracle(int target) {
  if (target < 0 || target > 7)
    throw ContractError("grover_oracle: target must be in 0..7");
  const Gates& g = gates();
  auto leg = [&](int bit) { return bit ? arrow::id() : g.x; };
  const QpiTerm mask = arrow::prod(
      leg((target >> 2) & 1),
      arrow::prod(leg((target >> 1) & 1), leg(target & 1)));
  return seq3(mask, g.ccz, mask);
}

TypeExpr grover3_domain() {
  return TypeExpr::prod(TypeExpr::one(),
                        TypeExpr::prod(TypeExpr::one(), TypeExpr::one()));
}

MeasuredTerm grover3(const QpiTerm& oracle, int iterations) {
  const Gates& g = gates();
  QpiTerm u = arrow::prod(g.plus, arrow::prod(g.plus, g.plus));
  for (int i = 0; i < iterations; ++i) {
    u = arrow::seq(u, arrow::seq(oracle, g.amplifier3));
  }
  const MeasuredTerm mz = mt::measure_z();
  return mt::seq(mt::pure(u), mt::prod(mz, mt::prod(mz, mz)));
}

TypeExpr simon_domain() { return qubits(4); }

MeasuredTerm simon() {
  // Wire order a0, a1, b0, b1 (most significant first); hidden string 11.
  const PiTerm h_layer =
      pi::prod_c(pi::x(), pi::prod_c(pi::x(), pi::prod_c(pi::id(), pi::id())));
  const PiTerm cx_a0_b0 =
      pi::ctrl(pi::prod_c(pi::id(), pi::prod_c(pi::x(), pi::id())));
  const PiTerm cx_a0_b1 =
      pi::ctrl(pi::prod_c(pi::id(), pi::prod_c(pi::id(), pi::x())));
  const PiTerm cx_a1_b0 =
      pi::prod_c(pi::id(), pi::ctrl(pi::prod_c(pi::x(), pi::id())));
  const PiTerm cx_a1_b1 =
      pi::prod_c(pi::id(), pi::ctrl(pi::prod_c(pi::id(), pi::x())));

  const QpiTerm u = arrow::arr(pizh::seq(
      pizh::arr_phi(h_layer),
      pizh::seq(pizh::arr_z(cx_a0_b0),
                pizh::seq(pizh::arr_z(cx_a0_b1),
                          pizh::seq(pizh::arr_z(cx_a1_b0),
                                    pizh::seq(pizh::arr_z(cx_a1_b1),
                                              pizh::arr_phi(h_layer)))))));

  const TypeExpr qq = TypeExpr::prod(qubit(), qubit());
  const MeasuredTerm measure_a =
      mt::first(mt::prod(mt::measure_z(), mt::measure_z()), qq);
  return mt::seq(mt::pure(u),
                 mt::seq(mt::pure(arrow::assocl_t()),
                         mt::seq(measure_a, mt::fst())));
}

const std::vector<NamedProgram>& corpus() {
  static const std::vector<NamedProgram> programs = [] {
    const Gates& g = gates();
    const TypeExpr q = qubit();
    const TypeExpr q2 = qubits(2);
    const TypeExpr q3 = qubits(3);
    const TypeExpr unit = TypeExpr::one();
    std::vector<NamedProgram> v;
    auto add = [&](const std::string& name, const QpiTerm& t,
                   const TypeExpr& dom, const std::string& doc) {
      v.push_back({name, mt::pure(t), dom, doc});
    };
    add("x", g.x, q, "negation");
    add("h", g.h, q, "basis change");
    add("z", g.z, q, "phase flip, h;x;h");
    add("cx", g.cx, q2, "controlled negation");
    add("cz", g.cz, q2, "controlled phase flip");
    add("ccx", g.ccx, q3, "Toffoli");
    add("ccz", g.ccz, q3, "doubly controlled phase flip");
    add("zero", g.zero, unit, "the state |0>");
    add("one", g.one, unit, "the state |1>");
    add("plus", g.plus, unit, "the state |+>");
    add("minus", g.minus, unit, "the state |->");
    add("assertZero", g.assert_zero, q, "the effect <0|");
    add("assertOne", g.assert_one, q, "the effect <1|");
    add("copyZ", g.copy_z, q, "computational-basis copy");
    add("copyX", g.copy_x, q, "rotated-basis copy");
    add("ctrlS", g.ctrl_s, q3, "controlled-S through the real encoding");
    add("amplifier3", g.amplifier3, q3, "3-qubit diffusion stage");
    v.push_back({"simon", simon(), simon_domain(),
                 "hidden-shift instance, a = 11"});
    v.push_back({"grover101", grover3(grover_oracle(5)), grover3_domain(),
                 "3-qubit search for |101>"});
    return v;
  }();
  return programs;
}

}  // namespace qpi
