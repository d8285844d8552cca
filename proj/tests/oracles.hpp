#pragma once

// Independent reference computations used only by the tests. None of these
// touch the engine under test.

#include "pshodge/polynomial.hpp"
#include "pshodge/rational.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using pshodge::Rational;

inline Rational fact(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// <tau_{d_1} ... tau_{d_n}>_0 = (n-3)! / prod d_i!
inline Rational genus_zero(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  Rational r = fact(n - 3);
  for (int x : d) r /= fact(x);
  return r;
}

// |B_{2k}| from the Akiyama-Tanigawa algorithm.
inline Rational abs_bernoulli_even(int two_k) {
  std::vector<Rational> a(static_cast<std::size_t>(two_k) + 1);
  for (int m = 0; m <= two_k; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return a[0] < 0 ? -a[0] : a[0];
}

// int_{Mbar_{g,1}} psi_1^{2g-2} lambda_g
inline Rational lambda_g_constant(int g) {
  const Rational p = pshodge::power(Rational(2), 2 * g - 1);
  return (p - 1) * abs_bernoulli_even(2 * g) / (p * fact(2 * g));
}

// int_{Mbar_g} lambda_{g-2} lambda_{g-1} lambda_g
inline Rational lambda_triple(int g) {
  return abs_bernoulli_even(2 * g - 2) / (2 * g - 2) * abs_bernoulli_even(2 * g) / (2 * g) / (2 * fact(2 * g - 2));
}

inline Rational multinomial(const std::vector<int>& a) {
  int total = std::accumulate(a.begin(), a.end(), 0);
  Rational r = fact(total);
  for (int x : a) r /= fact(x);
  return r;
}

// B_k as a sum over set partitions of {1..k} of prod x_{|block|}.
inline pshodge::Polynomial bell_by_set_partitions(int k) {
  pshodge::Polynomial total;
  std::vector<int> block(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == k) {
      std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
      for (int b : block) ++sizes[b];
      pshodge::Polynomial term = pshodge::Polynomial(1);
      for (int s : sizes) term = term * pshodge::Polynomial::variable(s);
      total = total + term;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return total;
}

// Count m-tuples of transpositions in S_d with left-to-right product equal to
// target and transitive generated group, by plain enumeration.
inline std::uint64_t naive_hurwitz(const std::vector<int>& target, int m) {
  const int d = static_cast<int>(target.size());
  std::vector<std::pair<int, int>> trans;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) trans.emplace_back(a, b);
  if (trans.empty() && m > 0) return 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> parent(static_cast<std::size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i : idx) {
      const auto [a, b] = trans[i];
      // apply p first, then the transposition
      for (int& x : p) {
        if (x == a) x = b;
        else if (x == b) x = a;
      }
      parent[find(a)] = find(b);
    }
    bool transitive = true;
    for (int x = 0; x < d; ++x) transitive = transitive && find(x) == find(0);
    if (transitive && p == target) ++count;
    int pos = 0;
    while (pos < m && ++idx[pos] == trans.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  return count;
}

}  // namespace oracle
