// Copyright 2026 The mstratio Authors.
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

#ifndef MSTRATIO_TOOLS_CLI_H_
#define MSTRATIO_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mstratio::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace mstratio::cli

#endif  // MSTRATIO_TOOLS_CLI_H_
