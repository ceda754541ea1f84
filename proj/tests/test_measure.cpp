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

#include <cmath>

#include "oracles.hpp"
#include "qpi/corpus.hpp"
#include "qpi/gen.hpp"

using namespace qpi;

namespace {
const TypeExpr q = qubit();
const double kPi = 3.14159265358979323846;
const double phi8 = kPi / 8;
const double s2 = 1.0 / std::sqrt(2.0);

CMatrix col(std::initializer_list<Complex> xs) {
  CMatrix m(static_cast<Eigen::Index>(xs.size()), 1);
  Eigen::Index i = 0;
  for (const Complex& x : xs) m(i++, 0) = x;
  return m;
}

DensityMatrix plus_state() { return DensityMatrix::pure(col({s2, s2})); }
}  // namespace

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix::basis_state(4, 2));
  CHECK_THROWS_AS(DensityMatrix::basis_state(2, 5), ContractError);
  CMatrix bad(2, 2);
  bad << 1, 1, 0, 1;  // not Hermitian
  CHECK_THROWS_AS((DensityMatrix(bad)), ContractError);
  CMatrix big = 2.0 * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS((DensityMatrix(big)), ContractError);
  CMatrix neg(2, 2);
  neg << 0.5, 0.6, 0.6, 0.5;  // eigenvalue -0.1
  CHECK_THROWS_AS((DensityMatrix(neg)), ContractError);
  // subnormalized states are fine
  CHECK_NOTHROW((DensityMatrix(CMatrix(0.25 * CMatrix::Identity(2, 2)))));
}

TEST_CASE("lift_contraction") {
  const CMatrix h = oracle::mat_h();
  const DensityMatrix out =
      apply(lift_contraction(h), DensityMatrix::basis_state(2, 0));
  CHECK(approx_eq(out.mat(), plus_state().mat(), 1e-12).equal);

  CHECK_THROWS_AS(lift_contraction(2.0 * identity(2)), ContractError);

  CMatrix bra0(1, 2);
  bra0 << 1, 0;
  const DensityMatrix fail =
      apply(lift_contraction(bra0), DensityMatrix::basis_state(2, 1));
  CHECK(fail.dim() == 1);
  CHECK(fail.trace_real() == doctest::Approx(0.0));
}

TEST_CASE("discard traces out everything") {
  CHECK(apply(discard(q), plus_state()).trace_real() == doctest::Approx(1.0));
  CHECK(discard(TypeExpr::one()).out_dim() == 1);
  const DensityMatrix half(
      CMatrix(0.5 * col({1, 0}) * dagger(col({1, 0}))));
  CHECK(apply(discard(2), half).mat()(0, 0).real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(discard(0), ContractError);
}

TEST_CASE("fst and snd are partial traces") {
  // |01><01|
  const DensityMatrix rho01 = DensityMatrix::basis_state(4, 1);
  CHECK(approx_eq(apply(fst(2, 2), rho01).mat(),
                  DensityMatrix::basis_state(2, 0).mat(), 1e-12)
            .equal);
  CHECK(approx_eq(apply(snd(2, 2), rho01).mat(),
                  DensityMatrix::basis_state(2, 1).mat(), 1e-12)
            .equal);

  // Bell state -> maximally mixed marginal (partial-trace oracle)
  const CMatrix bell = col({s2, 0, 0, s2});
  const DensityMatrix rho_bell = DensityMatrix::pure(bell);
  const CMatrix lhs = apply(fst(2, 2), rho_bell).mat();
  CHECK(approx_eq(lhs, oracle::partial_trace_second(rho_bell.mat(), 2, 2),
                  1e-12)
            .equal);
  CHECK(approx_eq(lhs, CMatrix(0.5 * identity(2)), 1e-12).equal);
  CHECK(approx_eq(apply(snd(2, 2), rho_bell).mat(),
                  oracle::partial_trace_first(rho_bell.mat(), 2, 2), 1e-12)
            .equal);
}

TEST_CASE("measure_z dephases") {
  const DensityMatrix out = apply(measure_z(), plus_state());
  CHECK(approx_eq(out.mat(), oracle::projective_measure_z(plus_state().mat()),
                  1e-12)
            .equal);
  CHECK(out.mat()(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(out.mat()(0, 1)) == doctest::Approx(0.0));

  // classical states are fixed points
  const DensityMatrix zero_state = DensityMatrix::basis_state(2, 0);
  CHECK(approx_eq(apply(measure_z(), zero_state).mat(), zero_state.mat(),
                  1e-12)
            .equal);
}

TEST_CASE("measure_phi fixes the rotated basis states") {
  const DensityMatrix out = apply(measure_phi(phi8), plus_state());
  CHECK(approx_eq(out.mat(), plus_state().mat(), 1e-10).equal);

  // H-conjugated projector-sum oracle
  const CMatrix h = oracle::mat_h();
  const CMatrix conj =
      h * oracle::projective_measure_z(h * plus_state().mat() * h) * h;
  CHECK(approx_eq(out.mat(), conj, 1e-10).equal);
}

TEST_CASE("projective measurement is idempotent") {
  Rng rng(83);
  for (int i = 0; i < 20; ++i) {
    CMatrix v(2, 1);
    v << Complex(rng.uniform(), rng.uniform()),
        Complex(rng.uniform(), rng.uniform());
    v /= std::sqrt(std::norm(v(0, 0)) + std::norm(v(1, 0)));
    const DensityMatrix rho = DensityMatrix::pure(v);
    const CMatrix once = apply(measure_z(), rho).mat();
    const CMatrix twice = apply(compose(measure_z(), measure_z()), rho).mat();
    CHECK(approx_eq(once, twice, 1e-12).equal);
    CHECK(
        approx_eq(once, oracle::projective_measure_z(rho.mat()), 1e-12).equal);
  }
}

TEST_CASE("tensor of identity and discard is fst") {
  Rng rng(89);
  const KrausMap lhs = tensor(identity_channel(2), discard(2));
  for (int i = 0; i < 10; ++i) {
    CMatrix v(4, 1);
    for (int k = 0; k < 4; ++k)
      v(k, 0) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    v /= std::sqrt(v.squaredNorm());
    const DensityMatrix rho = DensityMatrix::pure(v);
    CHECK(approx_eq(apply(lhs, rho).mat(), apply(fst(2, 2), rho).mat(), 1e-12)
              .equal);
  }
}

TEST_CASE("apply conjugates") {
  const CMatrix x = oracle::mat_x();
  CHECK(approx_eq(
            apply(lift_contraction(x), DensityMatrix::basis_state(2, 0)).mat(),
            DensityMatrix::basis_state(2, 1).mat(), 0)
            .equal);
}

TEST_CASE("trace monotonicity and discard-absorbs-unitaries") {
  Rng rng(97);
  for (int i = 0; i < 60; ++i) {
    const TypeExpr dom = random_type(rng, 2, 8, 2);
    const PiTerm c = random_pi_term(rng, dom, 4);
    const TypeExpr cod = typecheck(c, dom);
    const CMatrix u = eval_pi(c, dom);
    // discard after a classical unitary is discard
    const KrausMap lhs = compose(lift_contraction(u), discard(cod.dim()));
    const DensityMatrix rho = DensityMatrix::basis_state(
        dom.dim(),
        static_cast<Eigen::Index>(rng.below(
            static_cast<std::uint64_t>(dom.dim()))));
    CHECK(approx_eq(apply(lhs, rho).mat(), apply(discard(dom.dim()), rho).mat(),
                    1e-9)
              .equal);
  }

  // trace never increases through random lifted contractions
  Rng rng2(101);
  for (int i = 0; i < 40; ++i) {
    TypeExpr dom = q;
    const QpiTerm d = random_qpi_term(rng2, dom);
    const KrausMap k = lift_contraction(eval_qpi(0.44, d, dom));
    const DensityMatrix rho = DensityMatrix::basis_state(dom.dim(), 0);
    CHECK(apply(k, rho).trace_real() <= rho.trace_real() + 1e-9);
  }
}

TEST_CASE("sampling follows the Born rule") {
  // h then measure on |0>: counts split evenly within 3 sigma
  const MeasuredTerm prog = mt::seq(mt::pure(gates().h), mt::measure_z());
  const SampleResult r = sample(phi8, prog, q, 0, 10000, 42);
  CHECK(r.success_prob == doctest::Approx(1.0));
  const auto c0 = r.counts.count("0") ? r.counts.at("0") : 0;
  const auto c1 = r.counts.count("1") ? r.counts.at("1") : 0;
  CHECK(c0 + c1 == 10000);
  CHECK(std::abs(static_cast<double>(c0) - 5000.0) <= 150.0);

  // x then measure on |0> is deterministic
  const SampleResult rx =
      sample(phi8, mt::seq(mt::pure(gates().x), mt::measure_z()), q, 0, 500,
             7);
  CHECK(rx.counts.at("1") == 500);

  // identical seeds give identical counts
  const SampleResult r2 = sample(phi8, prog, q, 0, 10000, 42);
  CHECK(r.counts == r2.counts);
  const SampleResult r3 = sample(phi8, prog, q, 0, 10000, 43);
  CHECK(r.counts != r3.counts);
}

TEST_CASE("post-selection failures are counted") {
  // h then assertZero succeeds half the time
  const MeasuredTerm prog =
      mt::pure(arrow::seq(gates().h, arrow::assert_zero()));
  const SampleResult r = sample(phi8, prog, q, 0, 10000, 5, /*unsafe=*/true);
  CHECK(r.success_prob == doctest::Approx(0.5));
  CHECK(r.counts.at("fail") > 4500);
  CHECK(r.counts.at("fail") < 5500);
  CHECK(r.counts.at("") + r.counts.at("fail") == 10000);
}

TEST_CASE("hiding after non-total stages is gated") {
  // assertZero is partial, so a following discard is rejected...
  const MeasuredTerm bad = mt::seq(
      mt::pure(arrow::seq(gates().h, arrow::assert_zero())), mt::discard());
  CHECK_THROWS_AS(compile_pipeline(phi8, bad, q), ContractError);
  // ...unless unsafe is requested
  CHECK_NOTHROW(compile_pipeline(phi8, bad, q, /*unsafe=*/true));
  // total prefixes pass the gate
  const MeasuredTerm ok = mt::seq(mt::pure(gates().copy_z), mt::fst());
  CHECK_NOTHROW(compile_pipeline(phi8, ok, q));
}

TEST_CASE("measured-term typing") {
  CHECK(typecheck_measured(mt::measure_z(), q) == q);
  CHECK_THROWS_AS(typecheck_measured(mt::measure_z(), TypeExpr::one()),
                  TypeCheckError);
  CHECK(typecheck_measured(mt::fst(), qubits(2)) == q);
  CHECK(typecheck_measured(mt::discard(), qubits(3)) == TypeExpr::one());
  CHECK_THROWS_AS(
      typecheck_measured(mt::fst(), TypeExpr::prod(q, TypeExpr::zero())),
      TypeCheckError);
  CHECK_THROWS_AS(typecheck_measured(mt::inv(mt::measure_z()), q),
                  ContractError);
  // non-classical output types are rejected by sampling
  const TypeExpr odd = TypeExpr::sum(TypeExpr::one(), q);
  CHECK_THROWS_AS(sample(phi8, mt::pure(arrow::id()), odd, 0, 10, 1, true),
                  ContractError);
}
