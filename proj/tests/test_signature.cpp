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

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hoqc/signature.hpp"
#include "hoqc/typegen.hpp"
#include "hoqc/typelang.hpp"

using hoqc::Rational;
using hoqc::Signature;
using hoqc::SystemLabel;
using hoqc::TypeExprPtr;

namespace {

Signature sig(const std::string& text) {
  return hoqc::signature_of(hoqc::parse(text));
}

std::set<std::string> strs(const Signature& s) { return s.rendered_strings(); }

std::vector<std::string> factor_names(const Signature& s) {
  std::vector<std::string> out;
  for (const SystemLabel& f : s.factors) out.push_back(f.name);
  return out;
}

}  // namespace

//============================================================================
// Frozen examples for the five connectives
//============================================================================

TEST_CASE("qubit state signature") {
  const Signature s = sig("A:2");
  CHECK(s.lambda == Rational(1, 2));
  CHECK(factor_names(s) == std::vector<std::string>{"A"});
  CHECK(strs(s) == std::set<std::string>{"0"});
  CHECK(hoqc::delta_dim(s) == 3);
  CHECK(s.total_dim() == 2);
}

TEST_CASE("qubit effect signature") {
  const Signature s = sig("bar(A:2)");
  CHECK(s.lambda == Rational(1));
  CHECK(strs(s).empty());
  CHECK(hoqc::delta_dim(s) == 0);
}

TEST_CASE("qubit channel signature") {
  const Signature s = sig("A:2 -> B:2");
  CHECK(s.lambda == Rational(1, 2));
  // output factor first in display order
  CHECK(factor_names(s) == std::vector<std::string>{"B", "A"});
  CHECK(strs(s) == std::set<std::string>{"00", "01"});
  CHECK(hoqc::delta_dim(s) == 12);
  CHECK(s.total_dim() == 4);
}

TEST_CASE("dual of the qubit channel") {
  const Signature s = sig("bar(A:2 -> B:2)");
  CHECK(s.lambda == Rational(1, 2));
  CHECK(strs(s) == std::set<std::string>{"10"});
  CHECK(hoqc::delta_dim(s) == 3);
}

TEST_CASE("channel lambda is one over the output dimension") {
  const Signature s = sig("A:2 -> B:3");
  CHECK(s.lambda == Rational(1, 3));  // lambda_y / (lambda_x d_x)
  CHECK(strs(s) == std::set<std::string>{"00", "01"});
  CHECK(hoqc::delta_dim(s) == 8 * 3 + 8);  // "00" + "01"
  CHECK(sig("A:3 -> B:2").lambda == Rational(1, 2));
}

TEST_CASE("tensor signature combines strings three ways") {
  const Signature s = sig("A:2 * B:2");
  CHECK(s.lambda == Rational(1, 4));
  CHECK(factor_names(s) == std::vector<std::string>{"B", "A"});
  CHECK(strs(s) == std::set<std::string>{"00", "01", "10"});
  CHECK(hoqc::delta_dim(s) == 9 + 3 + 3);

  // tensor of two channels: strings with an identity half survive only
  // when that half is the full identity of the other channel
  const Signature t = sig("(A:2 -> B:2) * (C:2 -> D:2)");
  CHECK(t.lambda == Rational(1, 4));
  CHECK(t.num_factors() == 4);
  const std::set<std::string> expected = {
      // left strings with right identity, right strings with left identity
      "0011", "0111", "1100", "1101",
      // products of the two allowed sets
      "0000", "0001", "0100", "0101"};
  CHECK(strs(t) == expected);
}

TEST_CASE("trivial systems carry no factor") {
  CHECK(sig("A:1").num_factors() == 0);
  CHECK(sig("A:1").lambda == Rational(1));
  CHECK(hoqc::delta_dim(sig("A:1")) == 0);
  CHECK(hoqc::types_equal(hoqc::parse("A:1 * B:2"), hoqc::parse("B:2")));
  // a trivial input turns a channel into a state, a trivial output into
  // an effect
  CHECK(hoqc::types_equal(sig("A:1 -> B:2"), sig("B:2")));
  CHECK(hoqc::types_equal(sig("B:2 -> A:1"), sig("bar(B:2)")));
}

//============================================================================
// Intersection
//============================================================================

TEST_CASE("intersection of a channel with its reverse") {
  const Signature a = sig("A:2 -> B:2");
  const Signature b = sig("B:2 -> A:2");
  const Signature both = hoqc::cap_sig(a, b);
  CHECK(both.lambda == Rational(1, 2));
  CHECK(strs(both) == std::set<std::string>{"00"});
  CHECK(hoqc::delta_dim(both) == 9);
  CHECK(hoqc::types_equal(both,
                          sig("(A:2 -> B:2) & (B:2 -> A:2)")));
}

TEST_CASE("intersection rejects mismatched operands") {
  CHECK_THROWS_AS(hoqc::cap_sig(sig("A:2"), sig("B:2")),
                  std::invalid_argument);
  // same systems, different identity coefficients
  CHECK_THROWS_AS(hoqc::cap_sig(sig("A:2 * B:2"), sig("A:2 -> B:2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(sig("(A:2 * B:2) & (A:2 -> B:2)"), std::invalid_argument);
}

TEST_CASE("dual of an intersection is the union of the duals") {
  const Signature a = sig("A:2 -> B:2");
  const Signature b = sig("B:2 -> A:2");
  const Signature both = hoqc::cap_sig(a, b);

  std::set<std::string> expected;
  for (const std::string& t : strs(hoqc::bar_sig(a))) expected.insert(t);
  // align the second dual to the display order of the first
  const Signature b_dual = hoqc::reorder(hoqc::bar_sig(b), a.factors);
  for (const std::string& t : strs(b_dual)) expected.insert(t);

  CHECK(strs(hoqc::bar_sig(both)) == expected);
}

TEST_CASE("tensor distributes over intersection") {
  const Signature a = sig("A:2 -> B:2");
  const Signature b = sig("B:2 -> A:2");
  const Signature z = sig("C:3");
  const Signature lhs = hoqc::tensor_sig(hoqc::cap_sig(a, b), z);
  const Signature rhs =
      hoqc::cap_sig(hoqc::tensor_sig(a, z), hoqc::tensor_sig(b, z));
  CHECK(hoqc::types_equal(lhs, rhs));
}

//============================================================================
// Arrow cell rule
//============================================================================

// For the qubit channel the surviving cells are exactly "00" and "01".
// Admitting the two extra mixed cells of the coarser seven-cell reading
// would also admit "10", i.e. traceless operators of the form t_B (x) I_A
// tensored the other way around: I_B (x) t_A.  Such a term shifts the
// partial trace over the output away from the identity, so no channel
// contains it; the five-cell rule is what keeps the set exact.  The
// numerical counterexample lives in the membership suite.
TEST_CASE("channel cells exclude the identity-out traceless-in cell") {
  const Signature chan = sig("A:2 -> B:2");
  CHECK(strs(chan).count("10") == 0);

  // seven-cell variant: five-cell strings plus (identity_in x dual_out)
  // and (allowed_in x identity_out)
  const Signature x = sig("A:2");
  const Signature y = sig("B:2");
  std::set<std::string> seven = strs(chan);
  const std::uint64_t kx = x.num_factors();
  for (std::uint64_t bx : x.strings) {
    seven.insert(chan.render_mask((y.ones_mask() << kx) | bx));
  }
  for (std::uint64_t by : hoqc::bar_sig(y).strings) {
    seven.insert(chan.render_mask((by << kx) | x.ones_mask()));
  }
  CHECK(seven == std::set<std::string>{"00", "01", "10"});
}

//============================================================================
// Structural identities on random types
//============================================================================

TEST_CASE("structural identities hold on random types") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TypeExprPtr x = hoqc::random_type(seed, 4, 3, "A", 5);
    const TypeExprPtr y = hoqc::random_type(seed + 900001, 4, 3, "B", 5);
    const Signature sx = hoqc::signature_of(x);
    const Signature sy = hoqc::signature_of(y);
    CAPTURE(hoqc::render(x));
    CAPTURE(hoqc::render(y));

    // involution of the dual
    CHECK(hoqc::types_equal(hoqc::bar_sig(hoqc::bar_sig(sx)), sx));

    // lambda * dual lambda * dimension = 1, exactly
    CHECK(sx.lambda * hoqc::bar_sig(sx).lambda * Rational(sx.total_dim()) ==
          Rational(1));

    // the strings of a type and of its dual partition the non-identity
    // cells, so the traceless dimensions add up to d^2 - 1
    CHECK(hoqc::delta_dim(sx) + hoqc::delta_dim(hoqc::bar_sig(sx)) + 1 ==
          sx.total_dim() * sx.total_dim());

    // maps are duals of product types
    CHECK(hoqc::types_equal(
        hoqc::arrow_sig(sx, sy),
        hoqc::bar_sig(hoqc::tensor_sig(sx, hoqc::bar_sig(sy)))));

    // contravariant self-duality of the arrow
    CHECK(hoqc::types_equal(
        hoqc::arrow_sig(sx, sy),
        hoqc::arrow_sig(hoqc::bar_sig(sy), hoqc::bar_sig(sx))));

    // commutativity and associativity of the tensor
    CHECK(hoqc::types_equal(hoqc::tensor_sig(sx, sy),
                            hoqc::tensor_sig(sy, sx)));

    const TypeExprPtr z = hoqc::random_type(seed + 1800002, 4, 3, "C", 5);
    const Signature sz = hoqc::signature_of(z);
    CHECK(hoqc::types_equal(
        hoqc::tensor_sig(hoqc::tensor_sig(sx, sy), sz),
        hoqc::tensor_sig(sx, hoqc::tensor_sig(sy, sz))));

    // currying
    CHECK(hoqc::types_equal(
        hoqc::arrow_sig(hoqc::tensor_sig(sx, sy), sz),
        hoqc::arrow_sig(sx, hoqc::arrow_sig(sy, sz))));
  }
}

//============================================================================
// Comparison, reordering and guards
//============================================================================

TEST_CASE("types_equal ignores display order but not labels") {
  const Signature chan = sig("A:2 -> B:2");
  CHECK(hoqc::types_equal(chan, hoqc::reorder(chan, {SystemLabel{"A", 2},
                                                     SystemLabel{"B", 2}})));
  CHECK_FALSE(hoqc::types_equal(sig("A:2"), sig("B:2")));
  CHECK_FALSE(hoqc::types_equal(sig("A:2"), sig("A:3")));
  CHECK_FALSE(hoqc::types_equal(sig("A:2"), sig("bar(A:2)")));
  CHECK(hoqc::types_equal(hoqc::parse("A:2 -> B:2"),
                          hoqc::parse("bar(bar(A:2 -> B:2))")));
}

TEST_CASE("bar_equivalent accepts one dual hop") {
  CHECK(hoqc::bar_equivalent(sig("A:2"), sig("A:2")));
  CHECK(hoqc::bar_equivalent(sig("A:2"), sig("bar(A:2)")));
  CHECK(hoqc::bar_equivalent(sig("bar(A:2)"), sig("A:2")));
  CHECK_FALSE(hoqc::bar_equivalent(sig("A:2"), sig("A:3")));
  CHECK_FALSE(hoqc::bar_equivalent(sig("A:2 -> B:2"), sig("A:2 * B:2")));
}

TEST_CASE("reorder permutes display order and keeps content") {
  const Signature chan = sig("A:2 -> B:2");
  const Signature flipped =
      hoqc::reorder(chan, {SystemLabel{"A", 2}, SystemLabel{"B", 2}});
  CHECK(factor_names(flipped) == std::vector<std::string>{"A", "B"});
  // "01" (B traceless, A identity) becomes "10" in the new order
  CHECK(strs(flipped) == std::set<std::string>{"00", "10"});
  CHECK(flipped.bit_strings() == chan.bit_strings());

  CHECK_THROWS_AS(hoqc::reorder(chan, {SystemLabel{"A", 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hoqc::reorder(chan, {SystemLabel{"A", 2}, SystemLabel{"C", 2}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hoqc::reorder(chan, {SystemLabel{"A", 3}, SystemLabel{"B", 2}}),
      std::invalid_argument);
}

TEST_CASE("delta_dim guards against 64-bit overflow") {
  const Signature huge = hoqc::elementary_sig(
      SystemLabel{"A", std::int64_t{1} << 32});
  CHECK_THROWS_AS(hoqc::delta_dim(huge), std::overflow_error);
}

TEST_CASE("factor enumeration is capped") {
  Signature wide;
  for (int i = 0; i < 18; ++i) {
    wide = hoqc::tensor_sig(
        wide, hoqc::elementary_sig(
                  SystemLabel{"Q" + std::to_string(i), 2}));
  }
  CHECK(wide.num_factors() == 18);
  // a 19th factor exceeds the enumeration guard
  CHECK_THROWS_AS(
      hoqc::tensor_sig(wide, hoqc::elementary_sig(SystemLabel{"Q18", 2})),
      std::invalid_argument);
}

TEST_CASE("comb signature matches its desugared arrow") {
  const Signature comb = sig("comb2(A0:2,A1:2,A2:2,A3:2)");
  CHECK(comb.lambda == Rational(1, 4));
  CHECK(comb.num_factors() == 4);
  CHECK(comb.strings.size() == 10);
  CHECK(hoqc::delta_dim(comb) == 204);
  CHECK(hoqc::types_equal(comb, sig("(A1:2 -> A2:2) -> A0:2 -> A3:2")));
}
