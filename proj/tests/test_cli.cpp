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

#include <doctest.h>

#include <filesystem>

#include "qhcat/category_file.hpp"
#include "report.hpp"

using namespace qhcat;
using qhcat::cli::run_command;

TEST_CASE("certify report for T_2") {
  cli::RunOptions opts;
  cli::RunResult r = run_command("certify", "builtin:t:2", opts);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.report["schema_version"] == 1);
  CHECK(r.report["passed"] == true);
  CHECK(r.report["category"]["morphisms"] == 4);
  CHECK_FALSE(r.report.contains("timings_ms"));
}

TEST_CASE("exit codes") {
  cli::RunOptions opts;
  CHECK(run_command("certify", "builtin:n3", opts).exit_code == cli::kMathFailure);
  CHECK(run_command("certify", "builtin:tl:2:0", opts).exit_code == cli::kMathFailure);
  CHECK(run_command("certify", "builtin:nope:2", opts).exit_code == cli::kUsage);
  CHECK(run_command("certify", "/nonexistent/file.cat", opts).exit_code == cli::kUsage);
  opts.max_dim = 3;
  CHECK(run_command("certify", "builtin:t:2", opts).exit_code == cli::kResourceBound);
}

TEST_CASE("standard report carries the ledger") {
  cli::RunOptions opts;
  cli::RunResult r = run_command("standard", "builtin:tl:3:1", opts);
  REQUIRE(r.exit_code == cli::kPass);
  const auto& st = r.report["result"]["standard"];
  CHECK(st.contains("layer_ledger"));
  CHECK(st["decomposition_matrix"] == nlohmann::ordered_json::parse("[[1,1],[0,1]]"));
  CHECK(run_command("standard", "builtin:tl:3:1", opts).report.dump() == r.report.dump());
}

TEST_CASE("analyze and validate stop early") {
  cli::RunOptions opts;
  cli::RunResult a = run_command("analyze", "builtin:t:2", opts);
  CHECK(a.exit_code == cli::kPass);
  CHECK(a.report["result"]["num_classes"] == 2);
  cli::RunResult v = run_command("validate", "builtin:t:2", opts);
  CHECK(v.exit_code == cli::kPass);
  CHECK(v.report["stages"].size() == 1);
  CHECK(cli::render_text(v.report).find("passed: true") != std::string::npos);
}

TEST_CASE("reports read category files") {
  const std::string path = (std::filesystem::temp_directory_path() / "qhcat_test_t2.cat").string();
  CategoryWithCocycle cc = builtin("builtin:tl:2:3");
  save(cc.category, cc.cocycle, path);
  cli::RunOptions opts;
  cli::RunResult r = run_command("certify", path, opts);
  CHECK(r.exit_code == cli::kPass);
  CHECK(r.report["category"]["morphisms"] == 2);
  std::filesystem::remove(path);
}
