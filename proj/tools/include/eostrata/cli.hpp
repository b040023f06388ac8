/*
 * Copyright 2026 The eostrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace eostrata::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

struct RunConfig {
  std::string command;  // strata | census | verify | bedard
  int c = 1;
  int g = 0;  // 0: not given
  int p = 2;
  int m = 1;
  std::string out;  // empty: stdout
  std::string format = "json";
  std::uint64_t seed = 1;
  int trials = 0;  // 0: every point
};

// Throws InvalidArgument when the configuration cannot be run.
void validate(const RunConfig& cfg);

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eostrata::cli
