#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "starricci/expr.hpp"
#include "starricci/symbol.hpp"

namespace starricci {

/// Parse tree for the ASCII expression grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?
///   primary := number | identifier | identifier '(' args ')' | '(' expr ')'
///
/// Numbers are integers or plain decimals. The only call understood by the
/// exact layer is `D(ei, f)`; numeric formulas (catalog data) may also call
/// elementary functions.
struct SyntaxNode {
  enum class Kind { Number, Identifier, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Number;
  std::string text;  // literal, identifier or function name
  std::vector<SyntaxNode> children;
  std::size_t position = 0;
};

SyntaxNode parse_syntax(std::string_view text);

/// Identifiers used as values (function names excluded), in first-use order.
std::vector<std::string> collect_identifiers(const SyntaxNode& node);

/// Exact conversion. Identifiers must resolve in the table.
Expr to_expr(const SyntaxNode& node, const SymbolTable& table);

Expr parse_expr(std::string_view text, const SymbolTable& table);

/// Parses `text`, declaring every unresolved identifier as a constant.
Expr parse_expr_declaring(std::string_view text, SymbolTable& table);

/// Floating-point evaluation with elementary functions (sin, cos, tan, cot,
/// sinh, cosh, tanh, coth, exp, log, sqrt) and the constants pi and inf.
double eval_formula(const SyntaxNode& node, const std::function<double(const std::string&)>& lookup);

}  // namespace starricci
