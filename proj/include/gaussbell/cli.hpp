// Copyright 2026 The gaussbell Authors
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

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace gaussbell::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,  // not bona fide, invalid efficiency, degenerate block
  kUsageError = 2,     // bad flags, unreadable or malformed input
};

/// Closed-form vs oracle agreement required by `detect --trace`.
inline constexpr double kTraceTolerance = 1e-10;

/// Runs the command line `args` (without the program name). Paths equal to
/// "-" read from `in` or write to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace gaussbell::cli
