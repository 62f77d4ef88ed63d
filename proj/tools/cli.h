// Copyright 2026 The Authors.
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

// The skewmat command line: verb dispatch, option parsing and reports.

#ifndef SKEWMAT_TOOLS_CLI_H_
#define SKEWMAT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace skewmat::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Reads SKEWMAT_TABLE_CAP. Returns the exit
// code; a failed verification exits with kExitDomainError.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewmat::cli

#endif  // SKEWMAT_TOOLS_CLI_H_
