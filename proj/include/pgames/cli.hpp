// Copyright 2026 The pgames Authors.
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


// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error (bad flags, out-of-range values).

#ifndef PGAMES_CLI_HPP_
#define PGAMES_CLI_HPP_

#include <iosfwd>

namespace pgames::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgames::cli

#endif  // PGAMES_CLI_HPP_
