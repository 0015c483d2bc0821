/*
 * Copyright 2026 The pdgcost Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PDGCOST_CLI_HPP
#define PDGCOST_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace pdgcost::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    parse_error = 1,
    validation_error = 2,
    axiom_failure = 3,
    usage_error = 64,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Game files named "-" are read from `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pdgcost::cli

#endif
