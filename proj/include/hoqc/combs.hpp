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
#include <optional>
#include <string>
#include <vector>

#include "hoqc/signature.hpp"

namespace hoqc {

/**
 * An n-tooth comb: wires A_0 .. A_{2n-1} listed by causal position, tooth j
 * being the pair (A_{2j} in, A_{2j+1} out), with an optional reordering of
 * the teeth.  perm[j] names the tooth visited j-th; empty means identity.
 */
struct CombSpec {
  int n = 1;
  std::vector<SystemLabel> labels;
  std::vector<int> perm;
};

/**
 * One order-preserving merge of the teeth of two combs: slot value 0 takes
 * the next tooth of the first comb, 1 the next tooth of the second.
 */
struct Interleaving {
  std::vector<int> slots;

  /** Tooth indices in merge order: first comb 0..m-1, second m..m+n-1. */
  std::vector<int> teeth_order() const;
};

/**
 * Outcome of one exact set-identity check.  `witness` holds a rendered
 * string from the symmetric difference when the sets differ.  `pair_equal`
 * is reported by the intersection check only: whether the intersection
 * over just the identity merge and the full swap already equals the
 * intersection over every merge.
 */
struct TheoremReport {
  std::string claim;
  int m = 0;
  int n = 0;
  bool equal = false;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;
  std::optional<std::string> witness;
  std::optional<bool> pair_equal;
};

/**
 * The allowed strings of an n-tooth comb, stated directly: over the wire
 * ordering A_{2n-1}, A_{2n-2}, ..., A_0 (leftmost = A_{2n-1}), exactly the
 * strings whose leading run of 1s has even length and which contain at
 * least one 0.  Purely symbolic; dimensions are not consulted.
 */
std::set<BitString> comb_strings(int n, const std::vector<SystemLabel>& labels);

/** All order-preserving merges of m and n teeth, lexicographic in slots. */
std::vector<Interleaving> interleavings(int m, int n);

/**
 * Signature of the comb with teeth visited in spec.perm order.  Factors
 * are listed by descending causal position of the reordered comb; trivial
 * wires (dimension 1) carry no factor, and strings fixing a traceless cell
 * on a trivial wire are dropped since that cell is empty.
 */
Signature permuted_comb_sig(const CombSpec& spec);

/**
 * Check that the tensor product of an m-comb and an n-comb spans exactly
 * the intersection of the merged (m+n)-comb spans over every interleaving,
 * and additionally whether two merges (identity and full swap) suffice.
 */
TheoremReport verify_interleaving_intersection(int m, int n);

/**
 * Check that the strings of the map type (m-comb -> n-comb) equal the
 * union of the strings of its two block orderings: the (m+n)-comb that
 * runs the m-comb before the inner teeth of the n-comb, and the one that
 * runs them after.  The outer tooth of the n-comb opens and closes both.
 */
TheoremReport verify_tombstone(int m, int n);

}  // namespace hoqc
