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

#include "hoqc/combs.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoqc {

namespace {

void check_comb_shape(int n, const std::vector<SystemLabel>& labels,
                      const char* where) {
  if (n < 1) {
    throw std::invalid_argument(std::string(where) +
                                ": a comb needs at least one tooth");
  }
  if (labels.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument(std::string(where) + ": expected " +
                                std::to_string(2 * n) + " wires, got " +
                                std::to_string(labels.size()));
  }
  std::set<std::string> names;
  for (const SystemLabel& l : labels) {
    if (l.dim < 1) {
      throw std::invalid_argument(std::string(where) + ": dimension of '" +
                                  l.name + "' must be at least 1");
    }
    if (!names.insert(l.name).second) {
      throw std::invalid_argument(std::string(where) + ": wire '" + l.name +
                                  "' appears twice");
    }
  }
}

// Raw masks over 2n wires in descending causal order (bit 2n-1 = wire
// A_{2n-1}): even-length leading run of 1s, then at least one 0.
std::set<std::uint64_t> comb_masks(int n) {
  const int k = 2 * n;
  std::set<std::uint64_t> out;
  for (int run = 0; run < k; run += 2) {
    const std::uint64_t head = ((std::uint64_t{1} << run) - 1)
                               << (k - run);  // run leading 1s, then a 0
    const int free_bits = k - run - 1;
    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << free_bits);
         ++tail) {
      out.insert(head | tail);
    }
  }
  return out;
}

// Signature of a comb whose wires, in causal order A_0..A_{2n-1}, are
// `wires`.  Display order is descending.  Trivial wires are projected out:
// a trivial factor has no traceless cell, so strings assigning it 0 vanish
// and the remaining strings simply lose that position.
Signature comb_sig(int n, const std::vector<SystemLabel>& wires) {
  check_comb_shape(n, wires, "comb_sig");
  const int k_full = 2 * n;
  std::vector<SystemLabel> display(wires.rbegin(), wires.rend());

  std::vector<int> keep;  // display positions with dim >= 2
  for (int i = 0; i < k_full; ++i) {
    if (display[i].dim >= 2) keep.push_back(i);
  }
  const std::size_t k = keep.size();

  Signature sig;
  for (int i : keep) sig.factors.push_back(display[i]);
  sig.lambda = Rational(1);
  for (int j = 1; j < k_full; j += 2) {
    sig.lambda = sig.lambda * Rational(1, wires[j].dim);
  }

  for (std::uint64_t full : comb_masks(n)) {
    std::uint64_t mask = 0;
    bool alive = true;
    for (std::size_t j = 0; j < k; ++j) {
      const bool bit =
          (full & (std::uint64_t{1} << (k_full - 1 - keep[j]))) != 0;
      if (bit) mask |= std::uint64_t{1} << (k - 1 - j);
    }
    for (int i = 0; i < k_full && alive; ++i) {
      if (display[i].dim == 1 &&
          !(full & (std::uint64_t{1} << (k_full - 1 - i)))) {
        alive = false;  // traceless cell on a trivial wire is empty
      }
    }
    if (alive) sig.strings.insert(mask);
  }
  return sig;
}

}  // namespace

std::vector<int> Interleaving::teeth_order() const {
  const int m =
      static_cast<int>(std::count(slots.begin(), slots.end(), 0));
  std::vector<int> out;
  out.reserve(slots.size());
  int next_first = 0;
  int next_second = m;
  for (int s : slots) out.push_back(s == 0 ? next_first++ : next_second++);
  return out;
}

std::set<BitString> comb_strings(int n,
                                 const std::vector<SystemLabel>& labels) {
  check_comb_shape(n, labels, "comb_strings");
  const int k = 2 * n;
  std::set<BitString> out;
  for (std::uint64_t mask : comb_masks(n)) {
    BitString bits;
    for (int i = 0; i < k; ++i) {
      // bit position i of the mask describes wire A_i
      bits[labels[i].name] = (mask & (std::uint64_t{1} << i)) != 0;
    }
    out.insert(std::move(bits));
  }
  return out;
}

std::vector<Interleaving> interleavings(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("interleavings: both combs need teeth");
  }
  std::vector<int> slots(static_cast<std::size_t>(m + n), 0);
  std::fill(slots.begin() + m, slots.end(), 1);
  std::vector<Interleaving> out;
  do {
    out.push_back(Interleaving{slots});
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

Signature permuted_comb_sig(const CombSpec& spec) {
  check_comb_shape(spec.n, spec.labels, "permuted_comb_sig");
  std::vector<int> perm = spec.perm;
  if (perm.empty()) {
    perm.resize(spec.n);
    for (int j = 0; j < spec.n; ++j) perm[j] = j;
  }
  if (perm.size() != static_cast<std::size_t>(spec.n)) {
    throw std::invalid_argument("permuted_comb_sig: perm length mismatch");
  }
  std::vector<char> seen(spec.n, 0);
  for (int t : perm) {
    if (t < 0 || t >= spec.n || seen[t]) {
      throw std::invalid_argument("permuted_comb_sig: perm is not a bijection");
    }
    seen[t] = 1;
  }
  // Teeth move as whole (in, out) wire pairs.
  std::vector<SystemLabel> wires;
  wires.reserve(2 * spec.n);
  for (int j = 0; j < spec.n; ++j) {
    wires.push_back(spec.labels[2 * perm[j]]);
    wires.push_back(spec.labels[2 * perm[j] + 1]);
  }
  return comb_sig(spec.n, wires);
}

namespace {

std::vector<SystemLabel> default_wires(const std::string& prefix, int count,
                                       std::int64_t dim) {
  std::vector<SystemLabel> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(SystemLabel{prefix + std::to_string(i), dim});
  }
  return out;
}

// Wires of the merged comb realized by one interleaving: each slot
// contributes the next tooth (in, out) of its comb.
std::vector<SystemLabel> merged_wires(const Interleaving& il,
                                      const std::vector<SystemLabel>& a,
                                      const std::vector<SystemLabel>& b) {
  std::vector<SystemLabel> out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (int s : il.slots) {
    if (s == 0) {
      out.push_back(a[ia++]);
      out.push_back(a[ia++]);
    } else {
      out.push_back(b[ib++]);
      out.push_back(b[ib++]);
    }
  }
  return out;
}

void fill_difference(const Signature& ref, const std::set<std::uint64_t>& lhs,
                     const std::set<std::uint64_t>& rhs,
                     TheoremReport& report) {
  report.equal = lhs == rhs;
  report.lhs_size = lhs.size();
  report.rhs_size = rhs.size();
  if (!report.equal) {
    for (std::uint64_t m : lhs) {
      if (!rhs.count(m)) {
        report.witness = ref.render_mask(m);
        return;
      }
    }
    for (std::uint64_t m : rhs) {
      if (!lhs.count(m)) {
        report.witness = ref.render_mask(m);
        return;
      }
    }
  }
}

}  // namespace

TheoremReport verify_interleaving_intersection(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument(
        "verify_interleaving_intersection: m, n >= 1 required");
  }
  const std::vector<SystemLabel> a = default_wires("a", 2 * m, 2);
  const std::vector<SystemLabel> b = default_wires("b", 2 * n, 2);
  const Signature lhs = tensor_sig(comb_sig(m, a), comb_sig(n, b));

  const std::vector<Interleaving> merges = interleavings(m, n);
  std::set<std::uint64_t> cap_all;
  std::set<std::uint64_t> cap_pair;
  bool first = true;
  for (std::size_t i = 0; i < merges.size(); ++i) {
    const Signature merged =
        reorder(comb_sig(m + n, merged_wires(merges[i], a, b)), lhs.factors);
    if (first) {
      cap_all = merged.strings;
      first = false;
    } else {
      std::set<std::uint64_t> next;
      std::set_intersection(cap_all.begin(), cap_all.end(),
                            merged.strings.begin(), merged.strings.end(),
                            std::inserter(next, next.begin()));
      cap_all = std::move(next);
    }
    // The lexicographically first merge is the identity, the last the swap.
    if (i == 0) {
      cap_pair = merged.strings;
    } else if (i + 1 == merges.size()) {
      std::set<std::uint64_t> next;
      std::set_intersection(cap_pair.begin(), cap_pair.end(),
                            merged.strings.begin(), merged.strings.end(),
                            std::inserter(next, next.begin()));
      cap_pair = std::move(next);
    }
  }

  TheoremReport report;
  report.claim = "interst";
  report.m = m;
  report.n = n;
  fill_difference(lhs, lhs.strings, cap_all, report);
  report.pair_equal = (cap_pair == cap_all);
  return report;
}

TheoremReport verify_tombstone(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("verify_tombstone: m, n >= 1 required");
  }
  const std::vector<SystemLabel> a = default_wires("a", 2 * m, 2);
  const std::vector<SystemLabel> c = default_wires("c", 2 * n, 2);
  const Signature lhs = arrow_sig(comb_sig(m, a), comb_sig(n, c));

  // Both orderings are (m+n)-combs opened by the input wire and closed by
  // the output wire of the n-comb's outer tooth; between them sit the
  // m-comb block and the inner teeth of the n-comb, in the two orders.
  std::vector<SystemLabel> p1;
  p1.push_back(c.front());
  p1.insert(p1.end(), a.begin(), a.end());
  p1.insert(p1.end(), c.begin() + 1, c.end() - 1);
  p1.push_back(c.back());

  std::vector<SystemLabel> p2;
  p2.push_back(c.front());
  p2.insert(p2.end(), c.begin() + 1, c.end() - 1);
  p2.insert(p2.end(), a.begin(), a.end());
  p2.push_back(c.back());

  const Signature s1 = reorder(comb_sig(m + n, p1), lhs.factors);
  const Signature s2 = reorder(comb_sig(m + n, p2), lhs.factors);
  std::set<std::uint64_t> rhs;
  std::set_union(s1.strings.begin(), s1.strings.end(), s2.strings.begin(),
                 s2.strings.end(), std::inserter(rhs, rhs.begin()));

  TheoremReport report;
  report.claim = "tombstone";
  report.m = m;
  report.n = n;
  fill_difference(lhs, lhs.strings, rhs, report);
  return report;
}

}  // namespace hoqc
