#include "pshodge/expr.hpp"

#include <cctype>

namespace pshodge {

TautExpr TautExpr::literal(Rational v) {
  TautExpr e;
  e.kind = Kind::literal;
  e.value = std::move(v);
  return e;
}

TautExpr TautExpr::lambda(int j) {
  TautExpr e;
  e.kind = Kind::lambda;
  e.index = j;
  return e;
}

TautExpr TautExpr::psi(int i) {
  TautExpr e;
  e.kind = Kind::psi;
  e.index = i;
  return e;
}

namespace {

TautExpr binary(TautExpr::Kind kind, TautExpr lhs, TautExpr rhs) {
  TautExpr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

}  // namespace

TautExpr TautExpr::sum(TautExpr lhs, TautExpr rhs) { return binary(Kind::sum, std::move(lhs), std::move(rhs)); }
TautExpr TautExpr::difference(TautExpr lhs, TautExpr rhs) {
  return binary(Kind::difference, std::move(lhs), std::move(rhs));
}
TautExpr TautExpr::product(TautExpr lhs, TautExpr rhs) {
  return binary(Kind::product, std::move(lhs), std::move(rhs));
}

TautExpr TautExpr::power(TautExpr base, int exponent) {
  TautExpr e;
  e.kind = Kind::power;
  e.exponent = exponent;
  e.children.push_back(std::move(base));
  return e;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what), position_(position) {}

SymbolIndexError::SymbolIndexError(const std::string& symbol, const std::string& what)
    : std::out_of_range(what), symbol_(symbol) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TautExpr parse() {
    TautExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail(pos_ < text_.size() ? std::string("expected an integer, found '") + text_[pos_] + "'"
                                              : "expected an integer, found end of input");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string s = digits();
    if (s.size() > 6) throw ParseError("integer " + s + " is too large here", start);
    return std::stoi(s);
  }

  TautExpr expr() {
    TautExpr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = TautExpr::sum(std::move(lhs), term());
      } else if (accept('-')) {
        lhs = TautExpr::difference(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  TautExpr term() {
    TautExpr lhs = factor();
    while (accept('*')) lhs = TautExpr::product(std::move(lhs), factor());
    return lhs;
  }

  TautExpr factor() {
    TautExpr b = base();
    if (accept('^')) return TautExpr::power(std::move(b), small_int());
    return b;
  }

  TautExpr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      TautExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (at_digit()) {
      Integer num(digits());
      if (accept('/')) {
        const std::size_t at = (skip_ws(), pos_);
        Integer den(digits());
        if (den == 0) throw ParseError("zero denominator", at);
        return TautExpr::literal(Rational(num, den));
      }
      return TautExpr::literal(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "lambda") return TautExpr::lambda(small_int());
      if (word == "psi") return TautExpr::psi(small_int());
      throw ParseError("unknown symbol '" + std::string(word) + "' (expected lambdaJ or psiI)", start);
    }
    fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const TautExpr& e) {
  switch (e.kind) {
    case TautExpr::Kind::sum:
    case TautExpr::Kind::difference:
      return 1;
    case TautExpr::Kind::product:
      return 2;
    case TautExpr::Kind::power:
      return 3;
    default:
      return 4;
  }
}

void print(const TautExpr& e, std::string& out);

void print_child(const TautExpr& child, int min_precedence, std::string& out) {
  const bool parens = precedence(child) < min_precedence;
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const TautExpr& e, std::string& out) {
  switch (e.kind) {
    case TautExpr::Kind::literal:
      out += to_string(e.value);
      break;
    case TautExpr::Kind::lambda:
      out += "lambda" + std::to_string(e.index);
      break;
    case TautExpr::Kind::psi:
      out += "psi" + std::to_string(e.index);
      break;
    case TautExpr::Kind::sum:
    case TautExpr::Kind::difference:
      print_child(e.children[0], 1, out);
      out += e.kind == TautExpr::Kind::sum ? " + " : " - ";
      print_child(e.children[1], 2, out);
      break;
    case TautExpr::Kind::product:
      print_child(e.children[0], 2, out);
      out += '*';
      print_child(e.children[1], 3, out);
      break;
    case TautExpr::Kind::power: {
      // a fraction literal is a single base token, so it needs no parentheses
      print_child(e.children[0], 4, out);
      out += '^' + std::to_string(e.exponent);
      break;
    }
  }
}

}  // namespace

TautExpr parse_expression(std::string_view text) { return Parser(text).parse(); }

TautExpr parse_expression(std::string_view text, int g, int n) {
  TautExpr e = parse_expression(text);
  validate(e, g, n);
  return e;
}

void validate(const TautExpr& expr, int g, int n) {
  if (expr.kind == TautExpr::Kind::lambda && (expr.index < 1 || expr.index > g)) {
    const std::string sym = "lambda" + std::to_string(expr.index);
    throw SymbolIndexError(sym, sym + ": lambda index " + std::to_string(expr.index) + " is outside 1.." +
                                    std::to_string(g) + " for g=" + std::to_string(g));
  }
  if (expr.kind == TautExpr::Kind::psi && (expr.index < 1 || expr.index > n)) {
    const std::string sym = "psi" + std::to_string(expr.index);
    throw SymbolIndexError(sym, sym + ": psi index " + std::to_string(expr.index) + " exceeds n=" +
                                    std::to_string(n) + (expr.index < 1 ? " or is below 1" : ""));
  }
  for (const auto& c : expr.children) validate(c, g, n);
}

std::string to_string(const TautExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

}  // namespace pshodge
