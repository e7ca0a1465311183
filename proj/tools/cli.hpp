// Copyright 2026 The fermap Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace fermap::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/**
 * Run one fermap command. `args` excludes the program name.
 *
 * Subcommands: known, tree-mapping, tree-matrix, verify, weights, classify2,
 * equivalent, transform, dot. A leading or trailing --json switches reports
 * to JSON.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermap::cli
