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

#include "hoqc/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoqc {

namespace {

// Explicit string enumeration walks up to 2^k masks; beyond this limit the
// sets no longer fit in memory and the caller should restructure the type.
constexpr std::size_t kMaxFactors = 18;

void check_enumerable(std::size_t num_factors, const char* where) {
  if (num_factors > kMaxFactors) {
    throw std::invalid_argument(
        std::string(where) + ": type has " + std::to_string(num_factors) +
        " nontrivial systems, beyond the enumeration limit of " +
        std::to_string(kMaxFactors));
  }
}

void check_disjoint(const Signature& x, const Signature& y,
                    const char* where) {
  std::set<std::string> names;
  for (const SystemLabel& f : x.factors) names.insert(f.name);
  for (const SystemLabel& f : y.factors) {
    if (names.count(f.name)) {
      throw std::invalid_argument(std::string(where) + ": system '" + f.name +
                                  "' appears in both operands");
    }
  }
}

std::vector<SystemLabel> sorted_factors(const Signature& s) {
  std::vector<SystemLabel> out = s.factors;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t Signature::total_dim() const {
  std::int64_t d = 1;
  for (const SystemLabel& f : factors) {
    if (f.dim > 0 && d > INT64_MAX / f.dim) {
      throw std::overflow_error("Signature: total dimension overflow");
    }
    d *= f.dim;
  }
  return d;
}

std::string Signature::render_mask(std::uint64_t mask) const {
  const std::size_t k = factors.size();
  std::string out(k, '0');
  for (std::size_t i = 0; i < k; ++i) {
    if (mask & (std::uint64_t{1} << (k - 1 - i))) out[i] = '1';
  }
  return out;
}

std::set<std::string> Signature::rendered_strings() const {
  std::set<std::string> out;
  for (std::uint64_t mask : strings) out.insert(render_mask(mask));
  return out;
}

std::set<BitString> Signature::bit_strings() const {
  std::set<BitString> out;
  const std::size_t k = factors.size();
  for (std::uint64_t mask : strings) {
    BitString bits;
    for (std::size_t i = 0; i < k; ++i) {
      bits[factors[i].name] =
          (mask & (std::uint64_t{1} << (k - 1 - i))) != 0;
    }
    out.insert(std::move(bits));
  }
  return out;
}

Signature elementary_sig(const SystemLabel& label) {
  if (label.dim < 1) {
    throw std::invalid_argument("elementary_sig: dimension of '" + label.name +
                                "' must be at least 1");
  }
  Signature s;
  if (label.dim == 1) {
    s.lambda = Rational(1);
    return s;  // trivial system: no factors, no traceless cells
  }
  s.factors = {label};
  s.lambda = Rational(1, label.dim);
  s.strings = {0};  // the lone traceless cell "0"
  return s;
}

Signature bar_sig(const Signature& x) {
  check_enumerable(x.num_factors(), "bar_sig");
  Signature s;
  s.factors = x.factors;
  s.lambda = (x.lambda * Rational(x.total_dim())).inverse();
  const std::uint64_t ones = x.ones_mask();
  for (std::uint64_t m = 0; m < ones; ++m) {
    if (!x.strings.count(m)) s.strings.insert(m);
  }
  return s;
}

Signature tensor_sig(const Signature& x, const Signature& y) {
  check_disjoint(x, y, "tensor_sig");
  Signature s;
  s.factors = y.factors;
  s.factors.insert(s.factors.end(), x.factors.begin(), x.factors.end());
  check_enumerable(s.num_factors(), "tensor_sig");
  s.lambda = x.lambda * y.lambda;
  const std::size_t kx = x.num_factors();
  const std::uint64_t ones_x = x.ones_mask();
  const std::uint64_t ones_y = y.ones_mask();
  for (std::uint64_t bx : x.strings) s.strings.insert((ones_y << kx) | bx);
  for (std::uint64_t by : y.strings) s.strings.insert((by << kx) | ones_x);
  for (std::uint64_t bx : x.strings) {
    for (std::uint64_t by : y.strings) s.strings.insert((by << kx) | bx);
  }
  return s;
}

Signature arrow_sig(const Signature& x, const Signature& y) {
  check_disjoint(x, y, "arrow_sig");
  Signature s;
  s.factors = y.factors;
  s.factors.insert(s.factors.end(), x.factors.begin(), x.factors.end());
  check_enumerable(s.num_factors(), "arrow_sig");
  s.lambda = y.lambda / (x.lambda * Rational(x.total_dim()));

  // A cell is excluded exactly when the input part is an identity or an
  // allowed input cell while the output part is not an allowed output
  // cell; everything else survives.  The identity cell of the whole space
  // falls inside the excluded set and is skipped along with it.
  const std::size_t kx = x.num_factors();
  const std::size_t ky = y.num_factors();
  const std::uint64_t ones_x = x.ones_mask();
  std::vector<char> excluded(std::size_t{1} << (kx + ky), 0);
  std::vector<std::uint64_t> in_cells(x.strings.begin(), x.strings.end());
  in_cells.push_back(ones_x);
  for (std::uint64_t bx : in_cells) {
    for (std::uint64_t by = 0; by < (std::uint64_t{1} << ky); ++by) {
      if (!y.strings.count(by)) excluded[(by << kx) | bx] = 1;
    }
  }
  for (std::uint64_t m = 0; m < excluded.size(); ++m) {
    if (!excluded[m]) s.strings.insert(m);
  }
  return s;
}

Signature cap_sig(const Signature& x, const Signature& y) {
  if (sorted_factors(x) != sorted_factors(y)) {
    throw std::invalid_argument(
        "cap_sig: operands live on different system sets");
  }
  if (x.lambda != y.lambda) {
    throw std::invalid_argument(
        "cap_sig: operands have different identity coefficients (" +
        x.lambda.to_string() + " vs " + y.lambda.to_string() + ")");
  }
  const Signature y_aligned = reorder(y, x.factors);
  Signature s;
  s.factors = x.factors;
  s.lambda = x.lambda;
  std::set_intersection(x.strings.begin(), x.strings.end(),
                        y_aligned.strings.begin(), y_aligned.strings.end(),
                        std::inserter(s.strings, s.strings.begin()));
  return s;
}

Signature signature_of(const TypeExprPtr& expr) {
  validate_labels(expr);
  const TypeExprPtr desugared = desugar_combs(expr);
  struct Rec {
    static Signature of(const TypeExprPtr& e) {
      switch (e->kind) {
        case TypeKind::Elementary:
          return elementary_sig(e->label);
        case TypeKind::Bar:
          return bar_sig(of(e->left));
        case TypeKind::Tensor:
          return tensor_sig(of(e->left), of(e->right));
        case TypeKind::Arrow:
          return arrow_sig(of(e->left), of(e->right));
        case TypeKind::Cap:
          return cap_sig(of(e->left), of(e->right));
        case TypeKind::Comb:
          break;  // removed by desugar_combs
      }
      throw std::logic_error("signature_of: unexpected node kind");
    }
  };
  return Rec::of(desugared);
}

Signature reorder(const Signature& s, const std::vector<SystemLabel>& order) {
  const std::size_t k = s.factors.size();
  if (order.size() != k) {
    throw std::invalid_argument("reorder: factor count mismatch");
  }
  // old display position of each requested factor
  std::vector<std::size_t> src(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (s.factors[j].name == order[i].name) {
        if (s.factors[j].dim != order[i].dim) {
          throw std::invalid_argument("reorder: dimension mismatch for '" +
                                      order[i].name + "'");
        }
        src[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("reorder: unknown system '" + order[i].name +
                                  "'");
    }
  }
  Signature out;
  out.factors = order;
  out.lambda = s.lambda;
  for (std::uint64_t mask : s.strings) {
    std::uint64_t remapped = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << (k - 1 - src[i]))) {
        remapped |= std::uint64_t{1} << (k - 1 - i);
      }
    }
    out.strings.insert(remapped);
  }
  return out;
}

bool types_equal(const Signature& a, const Signature& b) {
  if (sorted_factors(a) != sorted_factors(b)) return false;
  if (a.lambda != b.lambda) return false;
  return a.strings == reorder(b, a.factors).strings;
}

bool types_equal(const TypeExprPtr& x, const TypeExprPtr& y) {
  return types_equal(signature_of(x), signature_of(y));
}

bool bar_equivalent(const Signature& a, const Signature& b) {
  return types_equal(a, b) || types_equal(a, bar_sig(b));
}

std::int64_t delta_dim(const Signature& s) {
  const std::size_t k = s.factors.size();
  __int128 total = 0;
  for (std::uint64_t mask : s.strings) {
    __int128 cell = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::uint64_t{1} << (k - 1 - i)))) {
        cell *= static_cast<__int128>(s.factors[i].dim) * s.factors[i].dim - 1;
      }
    }
    total += cell;
    if (total > INT64_MAX) {
      throw std::overflow_error("delta_dim: dimension exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace hoqc
