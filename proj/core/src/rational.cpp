#include "pshodge/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pshodge {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

Rational factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of a negative number");
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return Rational(c);
}

Rational double_factorial_odd(int k) {
  Integer f = 1;
  for (int i = 2 * k - 1; i > 1; i -= 2) f *= i;
  return Rational(f);
}

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("negative Bernoulli index");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(table.size()) <= k) {
    const int m = static_cast<int>(table.size());
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * table[j];
    table.push_back(-acc / (m + 1));
  }
  return table[k];
}

}  // namespace pshodge
