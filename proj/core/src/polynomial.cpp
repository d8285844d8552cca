#include "pshodge/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pshodge {

namespace {

void strip(Polynomial::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) terms_.emplace(Exponents{}, std::move(constant));
}

Polynomial Polynomial::variable(int index) {
  if (index < 1) throw std::invalid_argument("polynomial variables are numbered from 1");
  Exponents e(static_cast<std::size_t>(index), 0);
  e.back() = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents exponents, Rational coeff) {
  Polynomial p;
  strip(exponents);
  p.add_term(exponents, coeff);
  return p;
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
  Exponents key = exponents;
  strip(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::max_variable() const noexcept {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()));
  return m;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    Exponents kept(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (v < values.size()) {
        term = term * values[v].pow(e[v]);
      } else {
        kept[v] = e[v];
      }
    }
    strip(kept);
    out += term * monomial(kept);
  }
  return out;
}

Polynomial Polynomial::scale_variables(std::span<const Rational> factors) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    for (std::size_t v = 0; v < e.size() && v < factors.size(); ++v) {
      for (int k = 0; k < e[v]; ++k) coeff *= factors[v];
    }
    out.add_term(e, coeff);
  }
  return out;
}

int Polynomial::weighted_degree(const Exponents& exponents) noexcept {
  int d = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) d += static_cast<int>(v + 1) * exponents[v];
  return d;
}

std::string Polynomial::to_string(std::string_view variable_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool constant = e.empty();
    if (constant || mag != 1) {
      os << pshodge::to_string(mag);
      if (!constant) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << variable_prefix << (v + 1);
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

}  // namespace pshodge
