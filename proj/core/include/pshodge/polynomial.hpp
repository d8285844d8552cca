#pragma once

#include "pshodge/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pshodge {

/// Sparse polynomial with rational coefficients in variables numbered 1, 2, ...
///
/// A monomial is stored as its exponent vector (entry v-1 is the exponent of
/// variable v) with trailing zeros stripped, so equal monomials compare equal.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT: implicit scalar promotion
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(int index);
  static Polynomial monomial(Exponents exponents, Rational coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponents& exponents) const;

  /// Highest variable index that occurs.
  int max_variable() const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int exponent) const;

  /// Replaces variable v by values[v-1]; variables beyond values.size() are kept.
  Polynomial substitute(std::span<const Polynomial> values) const;

  /// Scales variable v by factors[v-1] (a linear change of variables).
  Polynomial scale_variables(std::span<const Rational> factors) const;

  /// Drops every monomial in which a variable rejected by keep() occurs.
  template <class Pred>
  Polynomial filter_variables(Pred keep) const {
    Polynomial out;
    for (const auto& [exps, c] : terms_) {
      bool ok = true;
      for (std::size_t v = 0; v < exps.size() && ok; ++v) ok = exps[v] == 0 || keep(static_cast<int>(v) + 1);
      if (ok) out.terms_.emplace(exps, c);
    }
    return out;
  }

  /// Sum of index*exponent; the natural grading when variable v has degree v.
  static int weighted_degree(const Exponents& exponents) noexcept;

  std::string to_string(std::string_view variable_prefix = "x") const;

 private:
  void add_term(const Exponents& exponents, const Rational& coeff);

  Terms terms_;
};

}  // namespace pshodge
