// Copyright 2026 The hoqc developers
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

#include <string>
#include <vector>

#include "doctest.h"

#include "hoqc/typegen.hpp"
#include "hoqc/typelang.hpp"

using hoqc::ParseError;
using hoqc::SystemLabel;
using hoqc::TypeExprPtr;
using hoqc::TypeKind;

namespace {

std::vector<SystemLabel> wires(int count) {
  std::vector<SystemLabel> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(SystemLabel{"A" + std::to_string(i), 2});
  }
  return out;
}

}  // namespace

TEST_CASE("parse handles atoms, precedence and associativity") {
  CHECK(hoqc::render(hoqc::parse("A:2")) == "A:2");
  CHECK(hoqc::render(hoqc::parse("A:2 -> B:3")) == "A:2 -> B:3");
  // arrow is right-associative and binds loosest
  CHECK(hoqc::render(hoqc::parse("A:2 -> B:2 -> C:2")) ==
        "A:2 -> B:2 -> C:2");
  CHECK(hoqc::render(hoqc::parse("(A:2 -> B:2) -> C:2")) ==
        "(A:2 -> B:2) -> C:2");
  // tensor binds tighter than cap, cap tighter than arrow
  CHECK(hoqc::render(hoqc::parse("A:2 * B:2 -> C:2")) ==
        "A:2 * B:2 -> C:2");
  CHECK(hoqc::equal(hoqc::parse("A:2 * B:2 & B:2 * A:2"),
                    hoqc::make_cap(
                        hoqc::make_tensor(hoqc::make_elem("A", 2),
                                          hoqc::make_elem("B", 2)),
                        hoqc::make_tensor(hoqc::make_elem("B", 2),
                                          hoqc::make_elem("A", 2)))));
  // tensor is left-associative
  CHECK(hoqc::equal(hoqc::parse("A:2 * B:2 * C:2"),
                    hoqc::make_tensor(
                        hoqc::make_tensor(hoqc::make_elem("A", 2),
                                          hoqc::make_elem("B", 2)),
                        hoqc::make_elem("C", 2))));
  CHECK(hoqc::render(hoqc::parse("bar(A:2)")) == "bar(A:2)");
  CHECK(hoqc::render(hoqc::parse("  A:2->B:2  ")) == "A:2 -> B:2");
}

TEST_CASE("render then parse is the identity on random expressions") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const TypeExprPtr expr = hoqc::random_type(seed, 5, 3);
    const std::string text = hoqc::render(expr);
    CAPTURE(text);
    CHECK(hoqc::equal(hoqc::parse(text), expr));
  }
}

TEST_CASE("comb sugar desugars to the frozen nested arrows") {
  const TypeExprPtr comb2 = hoqc::parse("comb2(A0:2,A1:2,A2:2,A3:2)");
  CHECK(comb2->kind == TypeKind::Comb);
  CHECK(hoqc::render(hoqc::desugar_combs(comb2)) ==
        "(A1:2 -> A2:2) -> A0:2 -> A3:2");

  const TypeExprPtr comb3 = hoqc::parse("comb3(A0:2,A1:2,A2:2,A3:2,A4:2,A5:2)");
  CHECK(hoqc::render(hoqc::desugar_combs(comb3)) ==
        "((A2:2 -> A3:2) -> A1:2 -> A4:2) -> A0:2 -> A5:2");

  // a 1-comb is exactly the arrow of its two wires
  CHECK(hoqc::equal(hoqc::desugar_combs(hoqc::parse("comb1(A:2,B:3)")),
                    hoqc::parse("A:2 -> B:3")));

  // desugaring reaches combs nested under other connectives
  const TypeExprPtr nested = hoqc::parse("bar(comb1(A:2,B:2)) * C:2");
  CHECK(hoqc::equal(hoqc::desugar_combs(nested),
                    hoqc::parse("bar(A:2 -> B:2) * C:2")));

  // comb_arrow mirrors make_comb
  CHECK(hoqc::equal(hoqc::comb_arrow(2, wires(4)),
                    hoqc::desugar_combs(hoqc::make_comb(2, wires(4)))));
}

TEST_CASE("parse errors carry the offending position") {
  CHECK_THROWS_AS(hoqc::parse(""), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A:2 ->"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("(A:2"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A:2)"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A:"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A:x"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("->:2"), ParseError);

  try {
    hoqc::parse("A:2 @ B:2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("dimensions must be positive integers") {
  CHECK_THROWS_AS(hoqc::parse("A:0"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("A:-1"), ParseError);
  CHECK(hoqc::parse("A:1")->label.dim == 1);
  CHECK_THROWS_AS(hoqc::parse("A:99999999999999999999999"), ParseError);
  CHECK_THROWS_AS(hoqc::make_elem("A", 0), ParseError);
}

TEST_CASE("label validation rejects reuse outside caps") {
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 * A:2")),
                  ParseError);
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 -> A:2")),
                  ParseError);
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 -> bar(A:2)")),
                  ParseError);
  // same name, different dimension inside one expression
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 -> A:3")),
                  ParseError);
  // cap operands must describe exactly the same systems
  CHECK_NOTHROW(
      hoqc::validate_labels(hoqc::parse("(A:2 -> B:2) & (B:2 -> A:2)")));
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 & B:2")),
                  ParseError);
  CHECK_THROWS_AS(hoqc::validate_labels(hoqc::parse("A:2 & A:3")),
                  ParseError);
  CHECK_NOTHROW(hoqc::validate_labels(hoqc::parse("A:2 & A:2")));
}

TEST_CASE("comb arity and wire validation") {
  CHECK_THROWS_AS(hoqc::parse("comb2(A0:2,A1:2,A2:2)"), ParseError);
  CHECK_THROWS_AS(hoqc::parse("comb2(A0:2,A1:2,A2:2,A3:2,A4:2)"),
                  ParseError);
  CHECK_THROWS_AS(hoqc::parse("comb1(A:2,A:2)"), ParseError);
  CHECK_THROWS_AS(hoqc::make_comb(0, {}), ParseError);
  CHECK_THROWS_AS(hoqc::make_comb(2, wires(3)), ParseError);
  // "comb0" is not comb syntax, so it reads as a malformed atom
  CHECK_THROWS_AS(hoqc::parse("comb0(A:2,B:2)"), ParseError);
  // a plain name that merely starts with "comb" is an ordinary system
  CHECK(hoqc::parse("combined:4")->kind == TypeKind::Elementary);
}

TEST_CASE("structural equality distinguishes kind, label and shape") {
  CHECK(hoqc::equal(hoqc::parse("A:2 -> B:2"), hoqc::parse("A:2->B:2")));
  CHECK_FALSE(hoqc::equal(hoqc::parse("A:2 -> B:2"),
                          hoqc::parse("B:2 -> A:2")));
  CHECK_FALSE(hoqc::equal(hoqc::parse("A:2"), hoqc::parse("A:3")));
  CHECK_FALSE(hoqc::equal(hoqc::parse("A:2 * B:2"),
                          hoqc::make_cap(hoqc::make_elem("A", 2),
                                         hoqc::make_elem("B", 2))));
  CHECK_FALSE(hoqc::equal(hoqc::parse("bar(A:2)"), hoqc::parse("A:2")));
}
