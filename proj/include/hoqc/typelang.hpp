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
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoqc {

/**
 * A named elementary system with a fixed finite dimension.
 *
 * Names are unique within a type expression (the intersection operator is
 * the one exception: its operands must name exactly the same systems).
 */
struct SystemLabel {
  std::string name;
  std::int64_t dim = 0;

  bool operator==(const SystemLabel& other) const {
    return name == other.name && dim == other.dim;
  }
  bool operator!=(const SystemLabel& other) const { return !(*this == other); }
  bool operator<(const SystemLabel& other) const {
    return name != other.name ? name < other.name : dim < other.dim;
  }
};

enum class TypeKind {
  Elementary,  // named system "A:2"
  Arrow,       // maps "x -> y"
  Tensor,      // parallel composition "x * y"
  Bar,         // dual type "bar(x)"
  Cap,         // intersection "x & y"
  Comb,        // sugar "combN(A0:d0, ..., A{2N-1}:d{2N-1})"
};

struct TypeExpr;
using TypeExprPtr = std::shared_ptr<const TypeExpr>;

/**
 * Immutable syntax tree for type expressions.
 *
 * Arrow, Tensor and Cap use both children; Bar uses only `left`.  A Comb
 * node keeps its wire list unexpanded so that the original text can be
 * reproduced; `desugar_combs` rewrites it into nested arrows.
 */
struct TypeExpr {
  TypeKind kind = TypeKind::Elementary;
  SystemLabel label;                    // Elementary
  TypeExprPtr left;                     // Arrow/Tensor/Cap/Bar
  TypeExprPtr right;                    // Arrow/Tensor/Cap
  int teeth = 0;                        // Comb
  std::vector<SystemLabel> comb_wires;  // Comb, size 2 * teeth
};

/** Syntax or validation failure, with the byte offset of the offending token. */
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Node factories.
TypeExprPtr make_elem(const std::string& name, std::int64_t dim);
TypeExprPtr make_arrow(TypeExprPtr left, TypeExprPtr right);
TypeExprPtr make_tensor(TypeExprPtr left, TypeExprPtr right);
TypeExprPtr make_bar(TypeExprPtr inner);
TypeExprPtr make_cap(TypeExprPtr left, TypeExprPtr right);
TypeExprPtr make_comb(int teeth, const std::vector<SystemLabel>& wires);

/** Structural equality of syntax trees (comb nodes are not expanded). */
bool equal(const TypeExprPtr& a, const TypeExprPtr& b);

/**
 * Parse a type expression.
 *
 * Grammar, loosest binding first: arrow `->` (right-associative), then
 * intersection `&`, then tensor `*` (both left-associative), then atoms:
 * `NAME : INT`, `bar(expr)`, `combN(...)`, parentheses.  Label uniqueness
 * is enforced across the whole tree; intersection operands must name
 * exactly the same systems.  Throws ParseError on any violation.
 */
TypeExprPtr parse(const std::string& text);

/** Canonical text form; `parse(render(t))` is structurally equal to `t`. */
std::string render(const TypeExprPtr& expr);

/**
 * The nested-arrow form of an N-tooth comb over the wires A_0 .. A_{2N-1}:
 * one tooth is `A_0 -> A_1`, and an N-tooth comb is
 * `(comb over A_1 .. A_{2N-2}) -> (A_0 -> A_{2N-1})`.
 */
TypeExprPtr comb_arrow(int teeth, const std::vector<SystemLabel>& wires);

/** Copy of the tree with every Comb node expanded via `comb_arrow`. */
TypeExprPtr desugar_combs(const TypeExprPtr& expr);

/**
 * Re-run the label checks on a programmatically built tree.  Throws
 * ParseError (position 0) on duplicate labels, mismatched intersection
 * operands, or non-positive dimensions.
 */
void validate_labels(const TypeExprPtr& expr);

}  // namespace hoqc
