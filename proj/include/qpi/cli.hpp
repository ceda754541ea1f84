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
#include <iosfwd>
#include <string>

namespace qpi::cli {

// Exit codes: 0 success / laws hold, 1 law failure, 2 usage/parse/type
// error.
inline constexpr int kOk = 0;
inline constexpr int kLawFailure = 1;
inline constexpr int kUsageError = 2;

// Accepts decimal radians or the literal forms pi, pi/8, 3*pi/8, ...
double parse_phi(const std::string& s);

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_compile(const std::string& path, const std::string& name,
                const std::string& phi, bool json, std::ostream& out,
                std::ostream& err);

int cmd_equiv(const std::string& path, const std::string& name1,
              const std::string& name2, const std::string& phi, double tol,
              bool json, std::ostream& out, std::ostream& err);

int cmd_laws(const std::string& phi, std::uint64_t seed, int count, bool json,
             std::ostream& out, std::ostream& err);

int cmd_run(const std::string& path, const std::string& name,
            const std::string& phi, std::uint64_t shots, std::uint64_t seed,
            std::int64_t input, bool unsafe, std::ostream& out,
            std::ostream& err);

}  // namespace qpi::cli
