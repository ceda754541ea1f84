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

#include <string>
#include <vector>

#include "qpi/pipeline.hpp"

namespace qpi {

// Built-in gates and states. x and h are the two lifted swaps; z is h;x;h;
// cz and ccz conjugate the target by h. copy_z duplicates the computational
// basis, copy_x the rotated one.
struct Gates {
  QpiTerm x, h, z;
  QpiTerm cx, cz;        // on qubit*qubit, control first
  QpiTerm ccx, ccz;      // on qubit*(qubit*qubit), controls first
  QpiTerm zero, one, plus, minus;
  QpiTerm assert_zero, assert_one;
  QpiTerm copy_z, copy_x;       // qubit ~> qubit*qubit
  QpiTerm ctrl_s;               // qubit*(qubit*qubit), encoding qubit last
  QpiTerm amplifier3;           // the 3-qubit diffusion stage
};

const Gates& gates();

// Phase oracle on three qubits flipping the sign of |target> (0..7), built
// as X-conjugated ccz.
QpiTerm grover_oracle(int target);

// Prepares |+++>, runs `iterations` rounds of oracle >>> amplifier, then
// measures all three qubits. Domain: 1*(1*1).
MeasuredTerm grover3(const QpiTerm& oracle, int iterations = 3);
TypeExpr grover3_domain();

// The two-qubit hidden-shift instance (a = 11): H on the first register,
// four CXs into the second register, H again, measure the first register and
// drop the second. Domain: four qubits; output: the two measured bits.
MeasuredTerm simon();
TypeExpr simon_domain();

struct NamedProgram {
  std::string name;
  MeasuredTerm term;
  TypeExpr domain;
  std::string doc;
};

// Stable listing of the named programs above (gates at their natural
// domains, plus the measured pipelines).
const std::vector<NamedProgram>& corpus();

}  // namespace qpi
