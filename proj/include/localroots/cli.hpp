// Copyright 2026 The localroots Authors
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

#ifndef LOCALROOTS_CLI_HPP
#define LOCALROOTS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace localroots {

/// Runs the localroots command line on args (without the program name).
/// Returns the process exit code: 0 success, 1 error, 2 when verify finds a
/// disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace localroots

#endif  // LOCALROOTS_CLI_HPP
