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

#ifndef HOQC_TYPEGEN_HPP_
#define HOQC_TYPEGEN_HPP_

//============================================================================
// Seeded random type expressions for property suites and the CLI verify
// command.  Kinds drawn: Elementary, Arrow, Tensor, Bar.  Every elementary
// leaf gets a fresh label X0, X1, ..., so the result always validates.
//============================================================================

#include <cstdint>
#include <string>

#include "hoqc/typelang.hpp"

namespace hoqc {

/**
 * A random type of depth at most max_depth with elementary dimensions in
 * [1, max_dim] (dimension 1 is drawn rarely).  At most max_leaves leaves,
 * keeping signature enumeration small.  Leaves are named prefix0, prefix1,
 * ..., so results built with distinct prefixes can be combined under '->'
 * or '*' without label clashes.  Deterministic in the seed.
 */
TypeExprPtr random_type(std::uint64_t seed, int max_depth = 5, int max_dim = 3,
                        const std::string& prefix = "X", int max_leaves = 10);

}  // namespace hoqc

#endif  // HOQC_TYPEGEN_HPP_
