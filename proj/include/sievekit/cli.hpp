// Copyright 2026 The sievekit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <iosfwd>

namespace sievekit {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1,  ///< counterexample, failed ledger row or non-positive bound
    kExitUsage = 2,
    kExitIo = 3,      ///< checkpoint or report file could not be read or written
    kExitInternal = 4,
};

/// Parses the command line, runs one subcommand and writes its report to
/// `out` (or to --out). Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sievekit
