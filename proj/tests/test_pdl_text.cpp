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


#include <doctest.h>

#include <random>

#include "pgames/bundled.hpp"
#include "pgames/families.hpp"
#include "pgames/pdl_text.hpp"
#include "pdl_fuzz.hpp"

namespace pgames {
namespace {

TEST_CASE("parse a small sheet") {
  const Pdl pdl = parse_pdl("params: p1,p2\nif p2 == 0 -> wager0\nelse -> {wager1: 0.4, wager2: rest}");
  CHECK(pdl.depth() == 2);
  CHECK(pdl.width() == 1);
  CHECK(pdl.params() == std::vector<std::string>{"p1", "p2"});
  const auto e = evaluate_pdl(pdl, {{"p1", 0.3}, {"p2", 0.1}});
  CHECK(prob_of(e.strategy, "wager2") == doctest::Approx(0.6));
}

TEST_CASE("comments and layout are free") {
  const Pdl pdl = parse_pdl(
      "# header comment\n"
      "params: x   # trailing\n"
      "if x <= 1e-3 and x >= -2.5E+1 -> a\n"
      "\n"
      "  else\n -> b\n");
  CHECK(pdl.width() == 2);
  CHECK(evaluate_pdl(pdl, {{"x", 0.0}}).strategy[0].action == "a");
  CHECK(evaluate_pdl(pdl, {{"x", 0.5}}).strategy[0].action == "b");
}

TEST_CASE("canonical rendering") {
  const Pdl pdl = parse_pdl("params: p1 , p2 if p1>=1/2 and p2!=0->x else->{x:p1*(1-p2),y:rest}");
  CHECK(render_pdl(pdl) ==
        "params: p1, p2\n"
        "  if p1 >= 1 / 2 and p2 != 0 -> x\n"
        "  else -> {x: p1 * (1 - p2), y: rest}\n");
}

TEST_CASE("malformed input reports a position") {
  for (const auto& m : testing::kMalformed) {
    CAPTURE(m.text);
    try {
      parse_pdl(m.text);
      FAIL("parsed malformed input");
    } catch (const PdlSyntaxError& e) {
      CHECK(e.line() == m.line);
      CHECK(e.column() == m.column);
      CHECK(std::string(e.what()).find("line " + std::to_string(m.line)) == 0);
      CHECK_FALSE(e.detail().empty());
    }
  }
}

TEST_CASE("dangling comparison names the arrow") {
  try {
    parse_pdl("params: p1\nif p1 < -> x\nelse -> y");
    FAIL("parsed");
  } catch (const PdlSyntaxError& e) {
    CHECK(e.detail().find("expected an expression") == 0);
    CHECK(e.detail().find("'->'") != std::string::npos);
  }
}

TEST_CASE("random bytes never crash the parser") {
  std::mt19937_64 rng(23);
  const std::string alphabet = "params:if else and rest -> {}(),+-*/<>=!#\n 0123456789.eE abcp1p2_";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 60);
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    for (std::size_t n = len(rng); n > 0; --n) text += alphabet[pick(rng)];
    try {
      parse_pdl(text);
    } catch (const PdlSyntaxError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    } catch (const DomainError&) {
      // Structurally valid text can still violate a list invariant.
    }
  }
}

TEST_CASE("render then parse is a semantic identity on random lists") {
  testing::Fuzzer fuzz(31);
  for (int i = 0; i < 1000; ++i) {
    const Pdl original = fuzz.pdl();
    const std::string text = render_pdl(original);
    CAPTURE(text);
    const Pdl reparsed = parse_pdl(text);
    CHECK(render_pdl(reparsed) == text);
    CHECK(reparsed.depth() == original.depth());
    CHECK(reparsed.width() == original.width());
    for (int k = 0; k < 10; ++k) {
      const Assignment at = fuzz.point();
      CAPTURE(describe(at));
      CHECK(testing::semantic_difference(original, reparsed, at) == "");
    }
  }
}

TEST_CASE("bundled sheets survive a render round trip") {
  for (const auto& name : bundled_names()) {
    const Pdl& original = bundled_pdl(name);
    const Pdl reparsed = parse_pdl(render_pdl(original));
    for (const auto& point : families::default_grid(name)) {
      CHECK(testing::semantic_difference(original, reparsed, point) == "");
    }
  }
}

}  // namespace
}  // namespace pgames
