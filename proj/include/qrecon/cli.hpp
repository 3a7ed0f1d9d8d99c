// Copyright 2026 The qrecon Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace qrecon::cli {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to the
/// --out file or to `out`; diagnostics and verify-all summary lines to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrecon::cli
