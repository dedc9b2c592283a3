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


// Cheat sheets compiled into the library from cheatsheets/*.pdl.

#ifndef PGAMES_BUNDLED_HPP_
#define PGAMES_BUNDLED_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pgames/pdl.hpp"

namespace pgames {

// "jeopardy_p1", "jeopardy_p2", "two_by_two", "weakest_link".
const std::vector<std::string>& bundled_names();

// Throws DomainError for an unknown name.
std::string_view bundled_text(std::string_view name);

// Parsed once on first use; the returned object lives for the program.
const Pdl& bundled_pdl(std::string_view name);

}  // namespace pgames

#endif  // PGAMES_BUNDLED_HPP_
