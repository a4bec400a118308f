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

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hoqc/rational.hpp"
#include "hoqc/typelang.hpp"

namespace hoqc {

/** Assignment of an identity (true) or traceless (false) cell per system. */
using BitString = std::map<std::string, bool>;

/**
 * Exact structural signature of a type: the elementary factors of its
 * carrier space, the identity coefficient lambda shared by all
 * deterministic elements, and the set of product cells spanning the
 * traceless part of the affine hull.
 *
 * Cells are encoded as bit masks over `factors`: factors[i] owns bit
 * (num_factors() - 1 - i), so the mask read as a binary numeral matches the
 * rendered string, whose i-th character describes factors[i].  Bit value 1
 * means the identity component on that factor, 0 means a traceless
 * component.  The all-ones mask (the identity cell itself) is never
 * stored.  Trivial systems (dimension 1) carry no factor at all.
 */
struct Signature {
  std::vector<SystemLabel> factors;
  Rational lambda{1, 1};
  std::set<std::uint64_t> strings;

  std::size_t num_factors() const { return factors.size(); }

  /** Product of factor dimensions (1 for a purely trivial type). */
  std::int64_t total_dim() const;

  /** Mask with every factor in its identity cell. */
  std::uint64_t ones_mask() const {
    return (std::uint64_t{1} << factors.size()) - 1;
  }

  /** Render one mask as a '0'/'1' string in factor display order. */
  std::string render_mask(std::uint64_t mask) const;

  /** All strings rendered in display order, sorted. */
  std::set<std::string> rendered_strings() const;

  /** All strings as label-keyed assignments (order-independent form). */
  std::set<BitString> bit_strings() const;
};

// Signatures of the five connectives.  tensor/arrow place the factors of y
// before the factors of x, matching the convention that the carrier of a
// map type lists output systems first.
Signature elementary_sig(const SystemLabel& label);
Signature bar_sig(const Signature& x);
Signature tensor_sig(const Signature& x, const Signature& y);
Signature arrow_sig(const Signature& x, const Signature& y);
Signature cap_sig(const Signature& x, const Signature& y);

/** Signature of an arbitrary expression; comb sugar is expanded first. */
Signature signature_of(const TypeExprPtr& expr);

/** Reorder the factor list; `order` must be a permutation of s.factors. */
Signature reorder(const Signature& s, const std::vector<SystemLabel>& order);

/**
 * True iff the two signatures describe the same set of deterministic
 * events: equal factor multisets (display order ignored), equal lambda,
 * and equal string sets after aligning factor orders.
 */
bool types_equal(const Signature& a, const Signature& b);

/** `types_equal` on the signatures of two expressions. */
bool types_equal(const TypeExprPtr& x, const TypeExprPtr& y);

/** True iff a and b name the same type outright or up to one dual. */
bool bar_equivalent(const Signature& a, const Signature& b);

/**
 * Real dimension of the traceless span: the sum over strings of the
 * product of (dim^2 - 1) over the traceless positions.
 */
std::int64_t delta_dim(const Signature& s);

}  // namespace hoqc
