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

#include "qpi/json_io.hpp"

namespace qpi {

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw ParseError("matrix_from_json: entry count does not match shape");
  }
  CMatrix m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++k) {
      m(i, j2) = Complex(entries[k][0].get<double>(),
                         entries[k][1].get<double>());
    }
  }
  return m;
}

nlohmann::json report_to_json(const LawReport& r) {
  return {{"law", r.law},          {"phi", r.phi},
          {"holds", r.holds},      {"max_deviation", r.max_deviation},
          {"lhs_dims", r.lhs_dims}, {"rhs_dims", r.rhs_dims},
          {"tol", r.tol}};
}

nlohmann::json sample_to_json(const SampleResult& r) {
  nlohmann::json j;
  for (const auto& [key, count] : r.counts) j[key] = count;
  j["success_prob"] = r.success_prob;
  return j;
}

}  // namespace qpi
