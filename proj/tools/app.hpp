/*
 *   Copyright 2026 The tiltlab Authors
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

/**
 * @file
 *
 * The command-line front end, callable in process so that tests can compare
 * reports byte for byte.
 */

#ifndef TILTLAB_TOOLS_APP_HPP
#define TILTLAB_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltlab::cli {

enum ExitCode : int { kConsistent = 0, kMismatch = 1, kInconclusive = 2, kInputError = 3 };

/// args excludes the program name. Writes the report to out and
/// diagnostics to err; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltlab::cli

#endif  // TILTLAB_TOOLS_APP_HPP
