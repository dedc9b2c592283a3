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


// Objective adapters and parameter grids for checking the bundled cheat
// sheets with check_implementability.
//
// Equilibrium families score a point by minus the max_regret of the profile
// the sheet produces (completed with the bundled sheet for the other player
// where needed), so the reported epsilon is the worst regret on the grid.

#ifndef PGAMES_FAMILIES_HPP_
#define PGAMES_FAMILIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pgames/pdl.hpp"
#include "pgames/strategic.hpp"

namespace pgames::families {

// "jeopardy_p1", "jeopardy_p2", "two_by_two", "weakest_link".
const std::vector<std::string>& names();

ObjectiveAdapter adapter(const std::string& family);

// Default grid for a family: the 0.05 grid on [0, 1]^2 for Jeopardy, 1,000
// random general-sum games on [-1, 1]^8 for two_by_two, the 0.05 grid with
// p1 > p2 and a defined case split for weakest_link.
std::vector<Assignment> default_grid(const std::string& family, std::uint64_t seed = 42);

std::vector<Assignment> jeopardy_grid(double step = 0.05);
std::vector<Assignment> two_by_two_grid(std::size_t count, std::uint64_t seed);
std::vector<Assignment> weakest_link_grid(double step = 0.05);

// Row and column marginals of a joint distribution over r1c1..r2c2.
StrategyProfile<double> two_by_two_profile(const ActionDistribution& joint);

}  // namespace pgames::families

#endif  // PGAMES_FAMILIES_HPP_
