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


// Cheat-sheet text format for decision lists.
//
//   # comment
//   params: p1, p2
//     if p2 == 0 -> wager0
//     if p1 >= 1/2 and p2 >= 1/2 -> wager2
//     else -> {wager1: (1 - p1) * (1 - 2 * p2) / (1 - p1 + p1 * p2), wager2: rest}
//
// Newlines are ordinary whitespace. A bare action label is the pure strategy.

#ifndef PGAMES_PDL_TEXT_HPP_
#define PGAMES_PDL_TEXT_HPP_

#include <string>
#include <string_view>

#include "pgames/pdl.hpp"

namespace pgames {

class PdlSyntaxError : public DomainError {
 public:
  // line and column are 1-based.
  PdlSyntaxError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  // Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

Pdl parse_pdl(std::string_view text);

// A single expression; every identifier is accepted as a parameter.
Expr parse_expr(std::string_view text);

// Canonical text: header line, one rule per line with a two-space indent,
// numbers in shortest round-trip form.
std::string render_pdl(const Pdl& pdl);

std::string render_strategy(const ParamStrategy& strategy);
std::string render_condition(const Comparison& cond);

}  // namespace pgames

#endif  // PGAMES_PDL_TEXT_HPP_
