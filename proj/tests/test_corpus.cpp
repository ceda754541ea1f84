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
#include <set>

#include "oracles.hpp"
#include "qpi/corpus.hpp"

using namespace qpi;

namespace {
const double kPi = 3.14159265358979323846;
const double phi8 = kPi / 8;
}  // namespace

TEST_CASE("corpus listing is well-formed") {
  std::set<std::string> names;
  for (const NamedProgram& p : corpus()) {
    INFO(p.name);
    CHECK(names.insert(p.name).second);
    CHECK_NOTHROW(typecheck_measured(p.term, p.domain));
    CHECK_FALSE(p.doc.empty());
  }
  CHECK(names.count("simon") == 1);
  CHECK(names.count("grover101") == 1);
}

TEST_CASE("the amplifier fixes the uniform state up to phase") {
  const CMatrix amp = eval_qpi(phi8, gates().amplifier3, qubits(3));
  CMatrix uniform(8, 1);
  for (int i = 0; i < 8; ++i) uniform(i, 0) = 1.0 / std::sqrt(8.0);
  const CMatrix out = amp * uniform;
  // the stage is -(2|u><u| - I), so u picks up exactly a sign
  CHECK(approx_eq(out, CMatrix(-uniform), 1e-10).equal);
}

TEST_CASE("search with the identity oracle stays uniform") {
  const SampleResult r =
      sample(phi8, grover3(arrow::id()), grover3_domain(), 0, 0, 1);
  for (int i = 0; i < 8; ++i) {
    CHECK(r.probs[static_cast<std::size_t>(i)] ==
          doctest::Approx(0.125).epsilon(1e-9));
  }
  CHECK(r.success_prob == doctest::Approx(1.0));
}

TEST_CASE("search succeeds for every marked element") {
  for (int target = 0; target < 8; ++target) {
    const SampleResult r = sample(phi8, grover3(grover_oracle(target)),
                                  grover3_domain(), 0, 0, 1);
    const double expected = oracle::grover_success_dense(target, 3);
    CHECK(r.probs[static_cast<std::size_t>(target)] ==
          doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK_THROWS_AS(grover_oracle(8), ContractError);
}

TEST_CASE("hidden-shift outcomes are orthogonal to the shift") {
  const SampleResult r =
      sample(phi8, simon(), simon_domain(), 0, 4000, 11);
  CHECK(r.success_prob == doctest::Approx(1.0));
  // a = 11: every sampled m has m0 xor m1 = 0
  for (const auto& [key, count] : r.counts) {
    REQUIRE(key.size() == 2);
    CHECK((key[0] - '0') == (key[1] - '0'));
    CHECK(count > 0);
  }
  // exact distribution from the independent dense simulation
  const auto dist = oracle::simon_distribution();
  for (int m = 0; m < 4; ++m) {
    CHECK(r.probs[static_cast<std::size_t>(m)] ==
          doctest::Approx(dist[static_cast<std::size_t>(m)]).epsilon(1e-10));
  }
}
