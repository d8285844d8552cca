#pragma once

#include "pshodge/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pshodge {

/// Syntax tree of a polynomial in lambda_1..lambda_g, psi_1..psi_n with
/// rational coefficients.
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nonneg-int)?
///   base     := rational | 'lambda' int | 'psi' int | '(' expr ')'
///   rational := int ('/' posint)?
///
/// Binary operators associate to the left; whitespace between tokens is ignored.
struct TautExpr {
  enum class Kind { literal, lambda, psi, sum, difference, product, power };

  Kind kind = Kind::literal;
  Rational value;       // literal
  int index = 0;        // lambda / psi
  int exponent = 0;     // power
  std::vector<TautExpr> children;

  static TautExpr literal(Rational v);
  static TautExpr lambda(int j);
  static TautExpr psi(int i);
  static TautExpr sum(TautExpr lhs, TautExpr rhs);
  static TautExpr difference(TautExpr lhs, TautExpr rhs);
  static TautExpr product(TautExpr lhs, TautExpr rhs);
  static TautExpr power(TautExpr base, int exponent);

  friend bool operator==(const TautExpr&, const TautExpr&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  /// Zero-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SymbolIndexError : public std::out_of_range {
 public:
  SymbolIndexError(const std::string& symbol, const std::string& what);
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Syntax only; symbol indices are not range checked.
TautExpr parse_expression(std::string_view text);

/// Parses and validates symbol indices against the ambient (g,n).
TautExpr parse_expression(std::string_view text, int g, int n);

/// Throws SymbolIndexError unless 1 <= j <= g for lambda_j and 1 <= i <= n for psi_i.
void validate(const TautExpr& expr, int g, int n);

/// Canonical text form; parse_expression(to_string(e)) == e.
std::string to_string(const TautExpr& expr);

}  // namespace pshodge
