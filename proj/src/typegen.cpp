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

#include "hoqc/typegen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace hoqc {

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, int max_dim, std::string prefix,
            int max_leaves)
      : rng_(seed),
        max_dim_(max_dim),
        prefix_(std::move(prefix)),
        leaves_left_(max_leaves) {}

  TypeExprPtr build(int depth) {
    const std::uint64_t r = rng_() % 10;
    const bool can_branch = depth > 0 && leaves_left_ >= 2;
    if (!can_branch || r >= 8) {
      return leaf();
    }
    if (r < 3) {
      auto [lhs, rhs] = children(depth);
      return make_arrow(lhs, rhs);
    }
    if (r < 6) {
      auto [lhs, rhs] = children(depth);
      return make_tensor(lhs, rhs);
    }
    return make_bar(build(depth - 1));
  }

  // Reserve one leaf for the right child while the left subtree builds, so
  // the whole tree never exceeds the leaf budget.
  std::pair<TypeExprPtr, TypeExprPtr> children(int depth) {
    leaves_left_ -= 1;
    TypeExprPtr lhs = build(depth - 1);
    leaves_left_ += 1;
    TypeExprPtr rhs = build(depth - 1);
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  TypeExprPtr leaf() {
    leaves_left_ -= 1;
    int dim = 1;
    if (max_dim_ >= 2) {
      // dimension 1 deliberately rare: trivial factors exercise edge
      // handling without dominating the sample
      dim = (rng_() % 8 == 0)
                ? 1
                : 2 + static_cast<int>(rng_() %
                                       static_cast<std::uint64_t>(max_dim_ - 1));
    }
    const std::string name = prefix_ + std::to_string(next_label_++);
    return make_elem(name, dim);
  }

  std::mt19937_64 rng_;
  int max_dim_;
  std::string prefix_;
  int next_label_ = 0;
  int leaves_left_;
};

}  // namespace

TypeExprPtr random_type(std::uint64_t seed, int max_depth, int max_dim,
                        const std::string& prefix, int max_leaves) {
  if (max_depth < 0 || max_dim < 1 || max_leaves < 1) {
    throw std::invalid_argument(
        "random_type: max_depth >= 0, max_dim >= 1, max_leaves >= 1");
  }
  Generator gen(seed, max_dim, prefix, max_leaves);
  return gen.build(max_depth);
}

}  // namespace hoqc
