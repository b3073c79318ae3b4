/*
   Copyright 2026 The veronese-cas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "veronese/errors.hpp"

namespace veronese::cli {

/// Runs one command line (without the program name) and writes its output,
/// including the single-line error report, to `out`. Returns the exit code:
/// 0 on success, 1 on a domain error, 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

int exit_code(ErrorKind kind);

/// Golden-file directory compiled into the binary.
std::filesystem::path default_golden_dir();

}  // namespace veronese::cli
