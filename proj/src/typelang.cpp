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

#include "hoqc/typelang.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace hoqc {

//============================================================================
// Node factories and structural equality
//============================================================================

TypeExprPtr make_elem(const std::string& name, std::int64_t dim) {
  if (dim < 1) {
    throw ParseError("dimension of '" + name + "' must be at least 1", 0);
  }
  auto node = std::make_shared<TypeExpr>();
  node->kind = TypeKind::Elementary;
  node->label = SystemLabel{name, dim};
  return node;
}

static TypeExprPtr make_binary(TypeKind kind, TypeExprPtr left,
                               TypeExprPtr right) {
  auto node = std::make_shared<TypeExpr>();
  node->kind = kind;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

TypeExprPtr make_arrow(TypeExprPtr left, TypeExprPtr right) {
  return make_binary(TypeKind::Arrow, std::move(left), std::move(right));
}

TypeExprPtr make_tensor(TypeExprPtr left, TypeExprPtr right) {
  return make_binary(TypeKind::Tensor, std::move(left), std::move(right));
}

TypeExprPtr make_cap(TypeExprPtr left, TypeExprPtr right) {
  return make_binary(TypeKind::Cap, std::move(left), std::move(right));
}

TypeExprPtr make_bar(TypeExprPtr inner) {
  auto node = std::make_shared<TypeExpr>();
  node->kind = TypeKind::Bar;
  node->left = std::move(inner);
  return node;
}

TypeExprPtr make_comb(int teeth, const std::vector<SystemLabel>& wires) {
  if (teeth < 1) throw ParseError("comb needs at least one tooth", 0);
  if (wires.size() != static_cast<std::size_t>(2 * teeth)) {
    throw ParseError("comb" + std::to_string(teeth) + " needs exactly " +
                         std::to_string(2 * teeth) + " systems",
                     0);
  }
  auto node = std::make_shared<TypeExpr>();
  node->kind = TypeKind::Comb;
  node->teeth = teeth;
  node->comb_wires = wires;
  return node;
}

bool equal(const TypeExprPtr& a, const TypeExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Elementary:
      return a->label == b->label;
    case TypeKind::Bar:
      return equal(a->left, b->left);
    case TypeKind::Arrow:
    case TypeKind::Tensor:
    case TypeKind::Cap:
      return equal(a->left, b->left) && equal(a->right, b->right);
    case TypeKind::Comb:
      return a->teeth == b->teeth && a->comb_wires == b->comb_wires;
  }
  return false;
}

//============================================================================
// Lexer
//============================================================================

namespace {

enum class TokKind { Name, Int, Arrow, Star, Amp, LParen, RParen, Colon,
                     Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      out.push_back({TokKind::Arrow, "->", 0, start});
      i += 2;
    } else if (c == '*') {
      out.push_back({TokKind::Star, "*", 0, start});
      ++i;
    } else if (c == '&') {
      out.push_back({TokKind::Amp, "&", 0, start});
      ++i;
    } else if (c == '(') {
      out.push_back({TokKind::LParen, "(", 0, start});
      ++i;
    } else if (c == ')') {
      out.push_back({TokKind::RParen, ")", 0, start});
      ++i;
    } else if (c == ':') {
      out.push_back({TokKind::Colon, ":", 0, start});
      ++i;
    } else if (c == ',') {
      out.push_back({TokKind::Comma, ",", 0, start});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string digits = text.substr(i, j - i);
      std::int64_t value = 0;
      try {
        value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", start);
      }
      out.push_back({TokKind::Int, digits, value, start});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_')) {
        ++j;
      }
      out.push_back({TokKind::Name, text.substr(i, j - i), 0, start});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({TokKind::End, "", 0, n});
  return out;
}

//============================================================================
// Parser
//
//   expr   := arrow
//   arrow  := cap ('->' arrow)?
//   cap    := tensor ('&' tensor)*
//   tensor := atom ('*' atom)*
//   atom   := NAME ':' INT | 'bar' '(' expr ')' | 'comb'N '(' elems ')'
//           | '(' expr ')'
//============================================================================

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  TypeExprPtr run() {
    TypeExprPtr expr = parse_arrow();
    expect(TokKind::End, "end of input");
    return expr;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(TokKind kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError("expected " + what + ", found '" +
                           (peek().kind == TokKind::End ? "end of input"
                                                        : peek().text) +
                           "'",
                       peek().pos);
    }
    return advance();
  }

  TypeExprPtr parse_arrow() {
    TypeExprPtr left = parse_cap();
    if (peek().kind == TokKind::Arrow) {
      advance();
      return make_arrow(std::move(left), parse_arrow());
    }
    return left;
  }

  TypeExprPtr parse_cap() {
    TypeExprPtr expr = parse_tensor();
    while (peek().kind == TokKind::Amp) {
      advance();
      expr = make_cap(std::move(expr), parse_tensor());
    }
    return expr;
  }

  TypeExprPtr parse_tensor() {
    TypeExprPtr expr = parse_atom();
    while (peek().kind == TokKind::Star) {
      advance();
      expr = make_tensor(std::move(expr), parse_atom());
    }
    return expr;
  }

  // "comb" followed by decimal digits, e.g. "comb2".
  static bool is_comb_name(const std::string& name, int& teeth) {
    if (name.size() < 5 || name.compare(0, 4, "comb") != 0) return false;
    std::int64_t value = 0;
    for (std::size_t i = 4; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
      value = value * 10 + (name[i] - '0');
      if (value > 64) return false;  // far beyond any enumerable size
    }
    if (value < 1) return false;
    teeth = static_cast<int>(value);
    return true;
  }

  SystemLabel parse_system(std::size_t* pos_out) {
    const Token& name = expect(TokKind::Name, "system name");
    expect(TokKind::Colon, "':'");
    const Token& dim = expect(TokKind::Int, "dimension");
    if (dim.value < 1) {
      throw ParseError("dimension must be at least 1", dim.pos);
    }
    if (pos_out) *pos_out = name.pos;
    return SystemLabel{name.text, dim.value};
  }

  TypeExprPtr parse_atom() {
    const Token& tok = peek();
    if (tok.kind == TokKind::LParen) {
      advance();
      TypeExprPtr expr = parse_arrow();
      expect(TokKind::RParen, "')'");
      return expr;
    }
    if (tok.kind == TokKind::Name) {
      int teeth = 0;
      if (tok.text == "bar" && tokens_[pos_ + 1].kind == TokKind::LParen) {
        advance();
        advance();
        TypeExprPtr inner = parse_arrow();
        expect(TokKind::RParen, "')'");
        return make_bar(std::move(inner));
      }
      if (is_comb_name(tok.text, teeth) &&
          tokens_[pos_ + 1].kind == TokKind::LParen) {
        const std::size_t comb_pos = tok.pos;
        advance();
        advance();
        std::vector<SystemLabel> wires;
        wires.push_back(parse_system(nullptr));
        while (peek().kind == TokKind::Comma) {
          advance();
          wires.push_back(parse_system(nullptr));
        }
        expect(TokKind::RParen, "')'");
        if (wires.size() != static_cast<std::size_t>(2 * teeth)) {
          throw ParseError("comb" + std::to_string(teeth) + " needs exactly " +
                               std::to_string(2 * teeth) + " systems, found " +
                               std::to_string(wires.size()),
                           comb_pos);
        }
        return make_comb(teeth, wires);
      }
      std::size_t pos = 0;
      SystemLabel label = parse_system(&pos);
      return make_elem(label.name, label.dim);
    }
    throw ParseError("expected a type atom, found '" +
                         (tok.kind == TokKind::End ? "end of input" : tok.text) +
                         "'",
                     tok.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

//============================================================================
// Label validation
//============================================================================

using LabelMap = std::map<std::string, std::int64_t>;

LabelMap collect_labels(const TypeExprPtr& expr, const char* op_name);

LabelMap merge_disjoint(const TypeExprPtr& left, const TypeExprPtr& right,
                        const char* op_name) {
  LabelMap lhs = collect_labels(left, op_name);
  LabelMap rhs = collect_labels(right, op_name);
  for (const auto& [name, dim] : rhs) {
    auto [it, inserted] = lhs.emplace(name, dim);
    if (!inserted) {
      throw ParseError("system '" + name + "' appears in both operands of '" +
                           op_name + "'",
                       0);
    }
  }
  return lhs;
}

LabelMap collect_labels(const TypeExprPtr& expr, const char*) {
  switch (expr->kind) {
    case TypeKind::Elementary:
      if (expr->label.dim < 1) {
        throw ParseError("dimension of '" + expr->label.name +
                             "' must be at least 1",
                         0);
      }
      return {{expr->label.name, expr->label.dim}};
    case TypeKind::Bar:
      return collect_labels(expr->left, "bar");
    case TypeKind::Arrow:
      return merge_disjoint(expr->left, expr->right, "->");
    case TypeKind::Tensor:
      return merge_disjoint(expr->left, expr->right, "*");
    case TypeKind::Cap: {
      LabelMap lhs = collect_labels(expr->left, "&");
      LabelMap rhs = collect_labels(expr->right, "&");
      if (lhs != rhs) {
        throw ParseError(
            "intersection operands must name exactly the same systems", 0);
      }
      return lhs;
    }
    case TypeKind::Comb: {
      LabelMap out;
      for (const SystemLabel& wire : expr->comb_wires) {
        if (wire.dim < 1) {
          throw ParseError("dimension of '" + wire.name +
                               "' must be at least 1",
                           0);
        }
        auto [it, inserted] = out.emplace(wire.name, wire.dim);
        if (!inserted) {
          throw ParseError("system '" + wire.name +
                               "' appears twice in a comb",
                           0);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

void validate_labels(const TypeExprPtr& expr) {
  if (!expr) throw ParseError("empty type expression", 0);
  collect_labels(expr, "");
}

TypeExprPtr parse(const std::string& text) {
  Parser parser(text);
  TypeExprPtr expr = parser.run();
  validate_labels(expr);
  return expr;
}

//============================================================================
// Rendering
//============================================================================

namespace {

// Binding strength used to decide where parentheses are required.
int precedence(TypeKind kind) {
  switch (kind) {
    case TypeKind::Arrow:
      return 0;
    case TypeKind::Cap:
      return 1;
    case TypeKind::Tensor:
      return 2;
    default:
      return 3;  // atoms
  }
}

void render_into(const TypeExprPtr& expr, std::string& out);

// Parenthesize `child` when its binding is weaker than the context, or on
// the side where the operator does not associate.
void render_child(const TypeExprPtr& child, int min_prec, std::string& out) {
  if (precedence(child->kind) < min_prec) {
    out += '(';
    render_into(child, out);
    out += ')';
  } else {
    render_into(child, out);
  }
}

void render_into(const TypeExprPtr& expr, std::string& out) {
  switch (expr->kind) {
    case TypeKind::Elementary:
      out += expr->label.name;
      out += ':';
      out += std::to_string(expr->label.dim);
      return;
    case TypeKind::Arrow:
      // Right-associative: a left-nested arrow needs parentheses.
      render_child(expr->left, precedence(TypeKind::Arrow) + 1, out);
      out += " -> ";
      render_child(expr->right, precedence(TypeKind::Arrow), out);
      return;
    case TypeKind::Cap:
      render_child(expr->left, precedence(TypeKind::Cap), out);
      out += " & ";
      render_child(expr->right, precedence(TypeKind::Cap) + 1, out);
      return;
    case TypeKind::Tensor:
      render_child(expr->left, precedence(TypeKind::Tensor), out);
      out += " * ";
      render_child(expr->right, precedence(TypeKind::Tensor) + 1, out);
      return;
    case TypeKind::Bar:
      out += "bar(";
      render_into(expr->left, out);
      out += ')';
      return;
    case TypeKind::Comb:
      out += "comb" + std::to_string(expr->teeth) + "(";
      for (std::size_t i = 0; i < expr->comb_wires.size(); ++i) {
        if (i) out += ", ";
        out += expr->comb_wires[i].name + ":" +
               std::to_string(expr->comb_wires[i].dim);
      }
      out += ')';
      return;
  }
}

}  // namespace

std::string render(const TypeExprPtr& expr) {
  std::string out;
  render_into(expr, out);
  return out;
}

//============================================================================
// Comb expansion
//============================================================================

TypeExprPtr comb_arrow(int teeth, const std::vector<SystemLabel>& wires) {
  if (teeth < 1) throw ParseError("comb needs at least one tooth", 0);
  if (wires.size() != static_cast<std::size_t>(2 * teeth)) {
    throw ParseError("comb" + std::to_string(teeth) + " needs exactly " +
                         std::to_string(2 * teeth) + " systems",
                     0);
  }
  TypeExprPtr tooth = make_arrow(make_elem(wires.front().name,
                                           wires.front().dim),
                                 make_elem(wires.back().name,
                                           wires.back().dim));
  if (teeth == 1) return tooth;
  std::vector<SystemLabel> inner(wires.begin() + 1, wires.end() - 1);
  return make_arrow(comb_arrow(teeth - 1, inner), tooth);
}

TypeExprPtr desugar_combs(const TypeExprPtr& expr) {
  switch (expr->kind) {
    case TypeKind::Elementary:
      return expr;
    case TypeKind::Bar: {
      TypeExprPtr inner = desugar_combs(expr->left);
      return inner == expr->left ? expr : make_bar(std::move(inner));
    }
    case TypeKind::Arrow:
    case TypeKind::Tensor:
    case TypeKind::Cap: {
      TypeExprPtr left = desugar_combs(expr->left);
      TypeExprPtr right = desugar_combs(expr->right);
      if (left == expr->left && right == expr->right) return expr;
      return make_binary(expr->kind, std::move(left), std::move(right));
    }
    case TypeKind::Comb:
      return comb_arrow(expr->teeth, expr->comb_wires);
  }
  return expr;
}

}  // namespace hoqc
