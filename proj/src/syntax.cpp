#include "starricci/syntax.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "starricci/error.hpp"

namespace starricci {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SyntaxNode parse() {
    SyntaxNode node = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static SyntaxNode binary(SyntaxNode::Kind kind, SyntaxNode lhs, SyntaxNode rhs, std::size_t pos) {
    SyntaxNode n{kind, {}, {}, pos};
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  SyntaxNode expr() {
    SyntaxNode lhs = term();
    for (;;) {
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(SyntaxNode::Kind::Add, std::move(lhs), term(), at);
      } else if (accept('-')) {
        lhs = binary(SyntaxNode::Kind::Sub, std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  SyntaxNode term() {
    SyntaxNode lhs = unary();
    for (;;) {
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(SyntaxNode::Kind::Mul, std::move(lhs), unary(), at);
      } else if (accept('/')) {
        lhs = binary(SyntaxNode::Kind::Div, std::move(lhs), unary(), at);
      } else {
        return lhs;
      }
    }
  }

  SyntaxNode unary() {
    std::size_t at = pos_;
    if (accept('-')) {
      SyntaxNode n{SyntaxNode::Kind::Negate, {}, {}, at};
      n.children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  SyntaxNode power() {
    SyntaxNode base = primary();
    std::size_t at = pos_;
    if (accept('^')) return binary(SyntaxNode::Kind::Pow, std::move(base), unary(), at);
    return base;
  }

  SyntaxNode primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      std::string lit(text_.substr(start, pos_ - start));
      if (lit == ".") {
        pos_ = start;
        fail("malformed number");
      }
      return SyntaxNode{SyntaxNode::Kind::Number, lit, {}, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) {
        SyntaxNode call{SyntaxNode::Kind::Call, name, {}, start};
        if (!accept(')')) {
          do {
            call.children.push_back(expr());
          } while (accept(','));
          expect(')');
        }
        return call;
      }
      return SyntaxNode{SyntaxNode::Kind::Identifier, name, {}, start};
    }
    if (accept('(')) {
      SyntaxNode inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational decimal_to_rational(const std::string& lit) {
  auto dot = lit.find('.');
  if (dot == std::string::npos) return Rational(mpz_class(lit, 10));
  std::string digits = lit.substr(0, dot) + lit.substr(dot + 1);
  if (digits.empty()) digits = "0";
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, lit.size() - dot - 1);
  Rational q(mpz_class(digits, 10), scale);
  q.canonicalize();
  return q;
}

void collect(const SyntaxNode& node, std::vector<std::string>& out) {
  if (node.kind == SyntaxNode::Kind::Identifier) {
    for (const auto& s : out)
      if (s == node.text) return;
    out.push_back(node.text);
    return;
  }
  std::size_t first = 0;
  // The direction argument of D(ei, f) is not a value.
  if (node.kind == SyntaxNode::Kind::Call && node.text == "D") first = 1;
  for (std::size_t i = first; i < node.children.size(); ++i) collect(node.children[i], out);
}

}  // namespace

SyntaxNode parse_syntax(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> collect_identifiers(const SyntaxNode& node) {
  std::vector<std::string> out;
  collect(node, out);
  return out;
}

Expr to_expr(const SyntaxNode& node, const SymbolTable& table) {
  using K = SyntaxNode::Kind;
  switch (node.kind) {
    case K::Number:
      return Expr(decimal_to_rational(node.text));
    case K::Identifier: {
      const Symbol* s = table.find(node.text);
      if (!s) throw Error(ErrorCode::UnknownSymbol, "unknown identifier '" + node.text + "' at position " +
                                                         std::to_string(node.position));
      return Expr(s->var);
    }
    case K::Negate:
      return -to_expr(node.children[0], table);
    case K::Add:
      return to_expr(node.children[0], table) + to_expr(node.children[1], table);
    case K::Sub:
      return to_expr(node.children[0], table) - to_expr(node.children[1], table);
    case K::Mul:
      return to_expr(node.children[0], table) * to_expr(node.children[1], table);
    case K::Div:
      return to_expr(node.children[0], table) / to_expr(node.children[1], table);
    case K::Pow: {
      Expr exponent = to_expr(node.children[1], table);
      if (!exponent.is_constant() || exponent.constant_value().get_den() != 1)
        throw ParseError(node.position, "exponent must be an integer constant");
      mpz_class k = exponent.constant_value().get_num();
      if (!k.fits_sint_p() || abs(k) > 4096) throw ParseError(node.position, "exponent out of range");
      return to_expr(node.children[0], table).pow(static_cast<int>(k.get_si()));
    }
    case K::Call: {
      if (node.text != "D")
        throw ParseError(node.position, "function '" + node.text + "' is not available in exact expressions");
      if (node.children.size() != 2 || node.children[0].kind != K::Identifier)
        throw ParseError(node.position, "D expects (ei, f)");
      auto dir = parse_frame_name(node.children[0].text);
      if (!dir) throw ParseError(node.children[0].position, "frame direction must be e1, e2 or e3");
      return derivative(to_expr(node.children[1], table), *dir, table);
    }
  }
  throw ParseError(node.position, "unhandled syntax node");
}

Expr parse_expr(std::string_view text, const SymbolTable& table) { return to_expr(parse_syntax(text), table); }

Expr parse_expr_declaring(std::string_view text, SymbolTable& table) {
  SyntaxNode node = parse_syntax(text);
  for (const auto& name : collect_identifiers(node))
    if (!table.find(name)) table.declare_constant(name);
  return to_expr(node, table);
}

double eval_formula(const SyntaxNode& node, const std::function<double(const std::string&)>& lookup) {
  using K = SyntaxNode::Kind;
  auto arg = [&](std::size_t i) { return eval_formula(node.children.at(i), lookup); };
  switch (node.kind) {
    case K::Number:
      return std::stod(node.text);
    case K::Identifier:
      if (node.text == "pi") return std::numbers::pi;
      if (node.text == "inf") return std::numeric_limits<double>::infinity();
      return lookup(node.text);
    case K::Negate:
      return -arg(0);
    case K::Add:
      return arg(0) + arg(1);
    case K::Sub:
      return arg(0) - arg(1);
    case K::Mul:
      return arg(0) * arg(1);
    case K::Div:
      return arg(0) / arg(1);
    case K::Pow:
      return std::pow(arg(0), arg(1));
    case K::Call: {
      if (node.children.size() != 1)
        throw ParseError(node.position, "function '" + node.text + "' takes one argument");
      const double x = arg(0);
      const std::string& f = node.text;
      if (f == "sin") return std::sin(x);
      if (f == "cos") return std::cos(x);
      if (f == "tan") return std::tan(x);
      if (f == "cot") return std::cos(x) / std::sin(x);
      if (f == "sinh") return std::sinh(x);
      if (f == "cosh") return std::cosh(x);
      if (f == "tanh") return std::tanh(x);
      if (f == "coth") return 1.0 / std::tanh(x);
      if (f == "exp") return std::exp(x);
      if (f == "log") return std::log(x);
      if (f == "sqrt") return std::sqrt(x);
      throw ParseError(node.position, "unknown function '" + f + "'");
    }
  }
  throw ParseError(node.position, "unhandled syntax node");
}

}  // namespace starricci
