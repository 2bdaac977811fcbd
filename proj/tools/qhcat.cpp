// Copyright 2026 The qhcat Authors.
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

// qhcat <validate|analyze|certify|standard> <file|builtin:...> [options]

#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "report.hpp"

int main(int argc, char** argv) {
  namespace cli = qhcat::cli;
  CLI::App app{"Quasi-heredity certificates for twisted category algebras"};
  app.require_subcommand(1, 1);
  cli::RunOptions opts;
  opts.max_dim = cli::default_max_dim();
  bool json = false;
  app.add_flag("--json", json, "print the report as JSON");
  app.add_option("--seed", opts.seed, "seed for randomized splitting and isomorphism probes");
  app.add_option("--max-dim", opts.max_dim, "refuse inputs with more morphisms (default $QHCAT_MAX_DIM or 512)");
  app.add_option("--stage", opts.stop_after, "stop after this stage")
      ->check(CLI::IsMember({"validate", "split", "green", "algebra", "radical", "heredity", "modules"}));
  app.add_flag("--timings", opts.timings, "include wall-clock time in the report");
  bool greatest = false;
  app.add_flag("--alternate-order", greatest,
               "break layer-order ties towards the greatest id and pick the greatest idempotent representatives");

  app.fallthrough();
  std::string input;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the category and cocycle axioms"},
      {"analyze", "J-classes, layer order and local data"},
      {"certify", "radical and heredity chain certificate"},
      {"standard", "certificate plus standard, simple and projective modules"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "category file or builtin:<family>:<n>[:<p>/<q>]")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }
  if (greatest) {
    opts.green.tie_break = qhcat::TieBreak::kGreatestFirst;
    opts.green.rep_choice = qhcat::RepChoice::kGreatestIdempotent;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const cli::RunResult res = cli::run_command(command, input, opts);
  if (json) {
    std::cout << res.report.dump(2) << '\n';
  } else {
    std::cout << cli::render_text(res.report);
  }
  return res.exit_code;
}
