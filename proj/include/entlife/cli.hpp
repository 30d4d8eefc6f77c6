// Copyright 2026 The entlife Authors
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

#ifndef ENTLIFE_CLI_HPP
#define ENTLIFE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace entlife::cli {

// Exit codes: 0 success, 1 validation or domain error, 2 numeric failure
// (no bracket, no crossing, failed verification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entlife::cli

#endif
