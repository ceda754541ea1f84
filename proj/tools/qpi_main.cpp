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

#include <CLI11.hpp>
#include <iostream>

#include "qpi/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qpi: typecheck, compile, compare and run .qpi programs"};
  app.require_subcommand(1);

  std::string file, name, name2;
  std::string phi = "pi/8";
  bool json = false, unsafe = false;
  double tol = 1e-10;
  std::uint64_t seed = 0, shots = 1024;
  std::int64_t input = 0;
  int count = 500;

  auto* check = app.add_subcommand("check", "parse and typecheck a file");
  check->add_option("file", file)->required();

  auto* compile =
      app.add_subcommand("compile", "print the matrix of a definition");
  compile->add_option("file", file)->required();
  compile->add_option("name", name)->required();
  compile->add_option("--phi", phi, "angle (radians or pi/8 forms)");
  compile->add_flag("--json", json);

  auto* equiv =
      app.add_subcommand("equiv", "compare two definitions semantically");
  equiv->add_option("file", file)->required();
  equiv->add_option("name1", name)->required();
  equiv->add_option("name2", name2)->required();
  equiv->add_option("--phi", phi);
  equiv->add_option("--tol", tol);
  equiv->add_flag("--json", json);

  auto* laws = app.add_subcommand("laws", "run the law and property suites");
  laws->add_option("--phi", phi);
  laws->add_option("--seed", seed);
  laws->add_option("--count", count);
  laws->add_flag("--json", json);

  auto* run = app.add_subcommand("run", "sample a measured pipeline");
  run->add_option("file", file)->required();
  run->add_option("name", name)->required();
  run->add_option("--phi", phi);
  run->add_option("--shots", shots);
  run->add_option("--seed", seed);
  run->add_option("--input", input, "basis-state index of the input");
  run->add_flag("--unsafe", unsafe,
                "skip totality gating / sample pure outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : qpi::cli::kUsageError;
  }

  if (check->parsed())
    return qpi::cli::cmd_check(file, std::cout, std::cerr);
  if (compile->parsed())
    return qpi::cli::cmd_compile(file, name, phi, json, std::cout, std::cerr);
  if (equiv->parsed())
    return qpi::cli::cmd_equiv(file, name, name2, phi, tol, json, std::cout,
                               std::cerr);
  if (laws->parsed())
    return qpi::cli::cmd_laws(phi, seed, count, json, std::cout, std::cerr);
  if (run->parsed())
    return qpi::cli::cmd_run(file, name, phi, shots, seed, input, unsafe,
                             std::cout, std::cerr);
  return qpi::cli::kUsageError;
}
