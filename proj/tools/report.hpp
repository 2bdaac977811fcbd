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

// Report assembly behind the qhcat command line.

#ifndef QHCAT_TOOLS_REPORT_HPP_
#define QHCAT_TOOLS_REPORT_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qhcat/modrep.hpp"

namespace qhcat::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kPass = 0,
  kMathFailure = 1,
  kUsage = 2,
  kResourceBound = 3,
};

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_dim = 512;
  std::string stop_after;
  bool timings = false;
  GreenOptions green;
};

struct RunResult {
  int exit_code = kPass;
  nlohmann::ordered_json report;
};

// command is one of validate, analyze, certify, standard.
RunResult run_command(const std::string& command, const std::string& input, const RunOptions& opts);

// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

// QHCAT_MAX_DIM if set to a positive integer, else 512.
std::size_t default_max_dim();

}  // namespace qhcat::cli

#endif  // QHCAT_TOOLS_REPORT_HPP_
