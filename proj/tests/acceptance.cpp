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

// End-to-end verification: one check per release criterion, each printed as
// a single pass/fail line. Exits nonzero if anything fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpi/cli.hpp"
#include "qpi/corpus.hpp"
#include "qpi/gen.hpp"
#include "qpi/json_io.hpp"
#include "qpi/laws.hpp"
#include "qpi/parser.hpp"

using namespace qpi;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPhi8 = kPi / 8;

struct Harness {
  int failures = 0;
  std::vector<std::string> notes;

  void criterion(int id, const std::string& title,
                 const std::function<void()>& body) {
    notes.clear();
    bool ok = true;
    std::string what;
    try {
      body();
      ok = notes.empty();
    } catch (const std::exception& e) {
      ok = false;
      what = e.what();
    }
    if (ok) {
      std::printf("PASS  criterion %2d: %s\n", id, title.c_str());
    } else {
      ++failures;
      std::printf("FAIL  criterion %2d: %s\n", id, title.c_str());
      for (const std::string& n : notes) std::printf("      - %s\n", n.c_str());
      if (!what.empty()) std::printf("      - exception: %s\n", what.c_str());
    }
  }

  void require(bool cond, const std::string& note) {
    if (!cond) notes.push_back(note);
  }
  void require_le(double value, double bound, const std::string& note) {
    if (!(value <= bound)) {
      notes.push_back(note + " (got " + std::to_string(value) + ", bound " +
                      std::to_string(bound) + ")");
    }
  }
};

std::string corpus_path(const std::string& f) {
  return std::string(QPI_CORPUS_DIR) + "/" + f;
}

std::map<std::string, LawReport> by_name(const std::vector<LawReport>& v) {
  std::map<std::string, LawReport> m;
  for (const LawReport& r : v) m.emplace(r.law, r);
  return m;
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "the rotated swap at pi/8 is the Hadamard matrix (1e-12)",
              [&] {
    const CMatrix m = eval_tagged(kPhi8, Tag::Phi, pi::swap_p(), qubit());
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix hadamard(2, 2);
    hadamard << s, s, s, -s;
    h.require_le(approx_eq(m, hadamard, 1e-12).max_abs_diff, 1e-12,
                 "rotated swap differs from Hadamard");
  });

  h.criterion(2,
              "classical-structure, execution and complementarity laws at "
              "pi/8 (<1e-10); complementarity breaks at pi/6 (>0.05)",
              [&] {
    const auto suite = by_name(run_suite(kPhi8));
    const char* names[] = {
        "copyZ-assoc",     "copyZ-comm",      "copyZ-special",
        "copyZ-frobenius", "copyX-assoc",     "copyX-comm",
        "copyX-special",   "copyX-frobenius", "exec-zero-assertZero",
        "exec-ctrl-zero",  "exec-ctrl-one",   "exec-state-effect-symmetry",
        "complementarity"};
    for (const char* n : names) {
      h.require_le(suite.at(n).max_deviation, 1e-10, std::string(n));
      h.require(suite.at(n).holds, std::string(n) + " does not hold");
    }
    const auto bad = by_name(run_suite(kPi / 6));
    h.require(!bad.at("complementarity").holds,
              "complementarity unexpectedly holds at pi/6");
    h.require(bad.at("complementarity").max_deviation > 0.05,
              "pi/6 deviation too small");
  });

  h.criterion(3,
              "the basis change lands in the four-member Hadamard family at "
              "pi/8 + k*pi/4 (1e-10)",
              [&] {
    for (int k = 0; k < 4; ++k) {
      const double phi = kPhi8 + k * kPi / 4.0;
      const CMatrix m = eval_qpi(phi, gates().h, qubit());
      double best = 1e9;
      for (const CMatrix& cand : hadamard_family()) {
        best = std::min(best, approx_eq(m, cand, 1e-10).max_abs_diff);
      }
      h.require_le(best, 1e-10,
                   "no family member matches at k=" + std::to_string(k));
    }
  });

  h.criterion(4, "small circuit identities (1e-10)", [&] {
    const auto suite = by_name(run_suite(kPhi8));
    for (const char* n : {"involution-x", "involution-h", "z-on-minus",
                          "ctrl-example", "two-qubit-slide"}) {
      h.require(suite.at(n).holds, std::string(n) + " fails");
      h.require_le(suite.at(n).max_deviation, 1e-10, n);
    }
  });

  h.criterion(5,
              "seeded property suite: 500 permutation-unitary core terms "
              "(1e-9), 500 normalize-stable lists (1e-10), 200 bounded "
              "lifted terms (1e-9)",
              [&] {
    const auto props = by_name(random_property_suite(kPhi8, 500, 20260809));
    h.require_le(props.at("pi-permutation-unitary").max_deviation, 1e-9,
                 "permutation-unitarity");
    h.require_le(props.at("pizh-normalize-preserves").max_deviation, 1e-10,
                 "normalization changes semantics");
    h.require_le(props.at("qpi-contraction-bound").max_deviation, 1e-9,
                 "spectral norm exceeds 1");
    for (const auto& [name, r] : props) {
      h.require(r.holds, name + " does not hold");
    }
  });

  h.criterion(6,
              "the hidden-shift pipeline measures {00: 1/2, 11: 1/2} "
              "exactly (1e-10 vs the dense oracle) and within 3 sigma over "
              "10000 shots",
              [&] {
    const auto oracle_dist = oracle::simon_distribution();
    h.require_le(std::abs(oracle_dist[0] - 0.5), 1e-12, "oracle p(00)");
    h.require_le(std::abs(oracle_dist[3] - 0.5), 1e-12, "oracle p(11)");

    const SampleResult r =
        sample(kPhi8, simon(), simon_domain(), 0, 10000, 2026);
    h.require(r.probs.size() == 4, "wrong outcome arity");
    for (int m = 0; m < 4; ++m) {
      h.require_le(std::abs(r.probs[static_cast<std::size_t>(m)] -
                            oracle_dist[static_cast<std::size_t>(m)]),
                   1e-10, "exact distribution entry " + std::to_string(m));
    }
    h.require_le(std::abs(r.success_prob - 1.0), 1e-10, "success probability");
    const double c00 =
        static_cast<double>(r.counts.count("00") ? r.counts.at("00") : 0);
    h.require(r.counts.count("01") == 0 && r.counts.count("10") == 0,
              "forbidden outcomes sampled");
    h.require(std::abs(c00 - 5000.0) <= 150.0, "00 counts outside 3 sigma");
  });

  h.criterion(7,
              "3-qubit search success agrees with the dense oracle and the "
              "amplitude recurrence for all 8 targets (1e-9); the 2-round "
              "variant hits sin^2(5 asin(1/sqrt 8))",
              [&] {
    const double p3 = oracle::grover_success_recurrence(3);
    for (int target = 0; target < 8; ++target) {
      const SampleResult r = sample(kPhi8, grover3(grover_oracle(target)),
                                    grover3_domain(), 0, 0, 1);
      const double pipeline = r.probs[static_cast<std::size_t>(target)];
      const double dense = oracle::grover_success_dense(target, 3);
      h.require_le(std::abs(pipeline - dense), 1e-9,
                   "pipeline vs dense, target " + std::to_string(target));
      h.require_le(std::abs(pipeline - p3), 1e-9,
                   "pipeline vs recurrence, target " + std::to_string(target));
    }
    const double p2 = oracle::grover_success_recurrence(2);
    h.require_le(std::abs(p2 - 121.0 / 128.0), 1e-12,
                 "recurrence sanity (121/128)");
    const SampleResult r2 = sample(kPhi8, grover3(grover_oracle(5), 2),
                                   grover3_domain(), 0, 0, 1);
    h.require_le(std::abs(r2.probs[5] - p2), 1e-9, "2-round variant");
    h.require_le(std::abs(oracle::grover_success_dense(5, 2) - p2), 1e-9,
                 "dense oracle, 2 rounds");
  });

  h.criterion(8,
              "measurement layer: rotated measurement is the H-conjugated Z "
              "measurement; Z measurement is idempotent; both projections "
              "of the copy agree (1e-10)",
              [&] {
    const auto suite = by_name(run_suite(kPhi8));
    for (const char* n : {"measure-phi-conjugation", "measure-z-idempotent",
                          "copy-fst-snd"}) {
      h.require(suite.at(n).holds, std::string(n) + " fails");
      h.require_le(suite.at(n).max_deviation, 1e-10, n);
    }
  });

  h.criterion(9,
              "the controlled-S program equals diag(1,1,1,i) under the "
              "complex encoding (1e-10)",
              [&] {
    CMatrix cs = CMatrix::Identity(4, 4);
    cs(3, 3) = Complex(0, 1);
    const CMatrix m = eval_qpi(kPhi8, gates().ctrl_s, qubits(3));
    h.require_le(m.imag().cwiseAbs().maxCoeff(), 1e-12, "matrix is not real");
    h.require_le(approx_eq(m, encode_complex(cs), 1e-10).max_abs_diff, 1e-10,
                 "encoding mismatch");
  });

  h.criterion(10,
              "CLI contract: corpus files round-trip, laws exit 0 at pi/8 "
              "and 1 at pi/6, identical seeds give byte-identical JSON",
              [&] {
    for (const char* name : {"gates.qpi", "simon.qpi", "grover.qpi"}) {
      const SourceFile f1 = parse_file(corpus_path(name));
      const std::string p1 = print_source(f1);
      const SourceFile f2 = parse_source(p1);
      h.require(print_source(f2) == p1,
                std::string(name) + " does not round-trip");
    }
    std::ostringstream o1, o2, o3, e;
    h.require(cli::cmd_laws("pi/8", 3, 120, true, o1, e) == cli::kOk,
              "laws at pi/8 should exit 0");
    h.require(cli::cmd_laws("pi/8", 3, 120, true, o2, e) == cli::kOk,
              "laws rerun should exit 0");
    h.require(o1.str() == o2.str(), "laws JSON differs between equal seeds");
    h.require(cli::cmd_laws("pi/6", 3, 120, true, o3, e) == cli::kLawFailure,
              "laws at pi/6 should exit 1");

    std::ostringstream r1, r2;
    h.require(cli::cmd_run(corpus_path("grover.qpi"), "grover101", "pi/8",
                           3000, 99, 0, false, r1, e) == cli::kOk,
              "run grover101 failed");
    h.require(cli::cmd_run(corpus_path("grover.qpi"), "grover101", "pi/8",
                           3000, 99, 0, false, r2, e) == cli::kOk,
              "run grover101 rerun failed");
    h.require(r1.str() == r2.str(), "run JSON differs between equal seeds");
  });

  if (h.failures == 0) {
    std::printf("all 10 criteria pass\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", h.failures);
  return 1;
}
