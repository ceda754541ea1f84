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

#include <json.hpp>

#include "qpi/laws.hpp"
#include "qpi/linalg.hpp"
#include "qpi/pipeline.hpp"

namespace qpi {

// Matrix wire format: {"rows":r,"cols":c,"entries":[[re,im],...]} row-major.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const LawReport& r);

// Counts map plus the success probability, flat:
// {"00":5021,...,"success_prob":1.0}.
nlohmann::json sample_to_json(const SampleResult& r);

}  // namespace qpi
