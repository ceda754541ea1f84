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

#include "qpi/pipeline.hpp"
#include "qpi/rng.hpp"

namespace qpi {

// Random finite types; dims stay in [min_dim, max_dim].
TypeExpr random_type(Rng& rng, int max_depth, Eigen::Index max_dim,
                     Eigen::Index min_dim = 1);

// Random well-typed core term at the given domain, grown bottom-up;
// `size` bounds the number of combinator nodes.
PiTerm random_pi_term(Rng& rng, const TypeExpr& domain, int size);

// Random chain-typed amalgamation starting at `domain`.
AmalgList random_amalg_list(Rng& rng, const TypeExpr& domain, int length,
                            int term_size);

// Random lifted term (may create and assert ancillas); returns the term and
// its domain through `domain_out`.
QpiTerm random_qpi_term(Rng& rng, TypeExpr& domain_out, int depth = 3);

}  // namespace qpi
