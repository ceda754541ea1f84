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

#include <optional>
#include <string>
#include <vector>

#include "qpi/pipeline.hpp"

namespace qpi {

// One `def name [: t1 ~> t2] = term` entry of a source file.
struct Definition {
  std::string name;
  std::optional<TypeExpr> dom;
  std::optional<TypeExpr> cod;
  MeasuredTerm term;
};

class SourceFile {
 public:
  explicit SourceFile(std::vector<Definition> defs) : defs_(std::move(defs)) {}
  const std::vector<Definition>& defs() const { return defs_; }
  const Definition& find(const std::string& name) const;
  bool contains(const std::string& name) const;

 private:
  std::vector<Definition> defs_;
};

// Parses `.qpi` text. Reported errors carry line:column positions. Names
// must be defined before use and annotated defs are typechecked against
// their signatures.
SourceFile parse_source(const std::string& text);
SourceFile parse_file(const std::string& path);

std::string print_source(const SourceFile& f);

}  // namespace qpi
