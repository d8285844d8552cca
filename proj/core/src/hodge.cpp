#include "pshodge/hodge.hpp"

#include "multiset.hpp"
#include "pshodge/moduli.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace pshodge {

using detail::for_each_split;
using detail::sum;
using detail::with_inserted;

Polynomial bell_polynomial(int k) {
  std::vector<Polynomial> x;
  for (int v = 1; v <= k; ++v) x.push_back(Polynomial::variable(v));
  return bell_evaluate<Polynomial>(k, x, Polynomial(1));
}

Polynomial lambda_to_ch(int j, int g) {
  if (j < 0) throw std::invalid_argument("negative lambda index");
  if (j > g) return {};
  if (j == 0) return Polynomial(1);
  // x_l = (-1)^{l-1} (l-1)! l! ch_l turns power sums into Chern characters
  std::vector<Rational> factors;
  for (int l = 1; l <= j; ++l) {
    Rational f = factorial(l - 1) * factorial(l);
    if (l % 2 == 0) f = -f;
    factors.push_back(f);
  }
  return Rational(1) / factorial(j) * bell_polynomial(j).scale_variables(factors);
}

Polynomial ch_to_lambda(int l) {
  if (l < 0) throw std::invalid_argument("negative Chern character index");
  if (l == 0) throw std::invalid_argument("ch_0 is the rank, not a polynomial in lambda classes");
  // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  std::vector<Polynomial> p(static_cast<std::size_t>(l) + 1);
  for (int k = 1; k <= l; ++k) {
    Polynomial pk = Rational(k % 2 == 1 ? k : -k) * Polynomial::variable(k);
    for (int i = 1; i < k; ++i) {
      const Rational sign = i % 2 == 1 ? 1 : -1;
      pk += sign * (Polynomial::variable(i) * p[k - i]);
    }
    p[k] = std::move(pk);
  }
  return Rational(1) / factorial(l) * p[l];
}

int HodgeMonomial::degree() const noexcept {
  int d = sum(psi);
  for (std::size_t j = 0; j < lambda.size(); ++j) d += static_cast<int>(j + 1) * lambda[j];
  return d;
}

HodgeEngine& HodgeEngine::shared() {
  static HodgeEngine engine(WkEngine::shared());
  return engine;
}

Rational hodge_integral(const HodgeMonomial& m) { return HodgeEngine::shared().integral(m); }

std::size_t HodgeEngine::VecHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int x : v) h = (h ^ std::hash<int>{}(x + 11)) * 1099511628211ull;
  return h;
}

void HodgeEngine::clear() {
  {
    std::unique_lock lock(mutex_);
    cache_.clear();
  }
  std::unique_lock lock(expansion_mutex_);
  expansions_.clear();
}

Rational HodgeEngine::integral(const HodgeMonomial& m) {
  const int g = m.g;
  const int n = m.n();
  if (!is_stable(g, n)) return 0;
  for (int e : m.psi) {
    if (e < 0) return 0;
  }
  std::vector<int> lambda = m.lambda;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < 0) return 0;
    if (lambda[j] > 0 && static_cast<int>(j + 1) > g) return 0;
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (m.degree() != moduli_dimension(g, n)) return 0;

  std::vector<int> psi = m.psi;
  std::sort(psi.begin(), psi.end());
  if (lambda.empty()) return wk_.integral(WKKey{g, std::move(psi)});

  Rational total = 0;
  for (const auto& [exps, coeff] : odd_ch_expansion(lambda).terms()) {
    std::vector<int> ch;
    for (std::size_t l = 0; l < exps.size(); ++l) ch.insert(ch.end(), exps[l], static_cast<int>(l + 1));
    total += coeff * eliminate(g, psi, {}, ch);
  }
  return total;
}

const Polynomial& HodgeEngine::odd_ch_expansion(const std::vector<int>& lambda) {
  {
    std::shared_lock lock(expansion_mutex_);
    if (auto it = expansions_.find(lambda); it != expansions_.end()) return it->second;
  }
  const int top = static_cast<int>(lambda.size());
  Polynomial product(1);
  for (int j = 1; j <= top; ++j) {
    if (lambda[j - 1] == 0) continue;
    const Polynomial factor = lambda_to_ch(j, top).filter_variables([](int l) { return l % 2 == 1; });
    product = product * factor.pow(lambda[j - 1]);
  }
  std::unique_lock lock(expansion_mutex_);
  return expansions_.try_emplace(lambda, std::move(product)).first->second;
}

Rational HodgeEngine::ch_kappa_psi_integral(int g, std::vector<int> psi, std::vector<int> kappa, std::vector<int> ch) {
  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());
  std::sort(ch.begin(), ch.end());
  return eliminate(g, psi, kappa, ch);
}

Rational HodgeEngine::eliminate(int g, const std::vector<int>& psi, const std::vector<int>& kappa,
                                const std::vector<int>& ch) {
  const int n = static_cast<int>(psi.size());
  if (!is_stable(g, n)) return 0;
  if (sum(psi) + sum(kappa) + sum(ch) != moduli_dimension(g, n)) return 0;
  if (ch.empty()) return wk_.kappa_psi_integral(KappaPsiMonomial{g, psi, kappa});
  // the genus-0 Hodge bundle is zero; even Chern characters vanish
  if (g == 0) return 0;
  for (int l : ch) {
    if (l % 2 == 0) return 0;
  }

  std::vector<int> key;
  key.reserve(psi.size() + kappa.size() + ch.size() + 3);
  key.push_back(g);
  key.insert(key.end(), psi.begin(), psi.end());
  key.push_back(-1);
  key.insert(key.end(), kappa.begin(), kappa.end());
  key.push_back(-2);
  key.insert(key.end(), ch.begin(), ch.end());
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  const int l = ch.back();
  const std::vector<int> rest(ch.begin(), ch.end() - 1);

  // kappa_l
  Rational bracket = eliminate(g, psi, with_inserted(kappa, l), rest);

  // - sum_i psi_i^l
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i > 0 && psi[i] == psi[i - 1]) continue;
    const auto count = std::count(psi.begin(), psi.end(), psi[i]);
    std::vector<int> raised = psi;
    raised[i] += l;
    std::sort(raised.begin(), raised.end());
    bracket -= Rational(static_cast<long>(count)) * eliminate(g, raised, kappa, rest);
  }

  // 1/2 sum over gluings of sum_{a+b=l-1} (-1)^a psi'^a psi''^b
  Rational boundary = 0;
  for (int a = 0; a <= l - 1; ++a) {
    const int b = l - 1 - a;
    const Rational sign = a % 2 == 0 ? 1 : -1;
    Rational glued = eliminate(g - 1, with_inserted(with_inserted(psi, a), b), kappa, rest);
    for (int h = 0; h <= g; ++h) {
      for_each_split(psi, [&](const std::vector<int>& psi_l, const std::vector<int>& psi_r, const Rational& w_psi) {
        const int n_l = static_cast<int>(psi_l.size()) + 1;
        const int n_r = static_cast<int>(psi_r.size()) + 1;
        if (!is_stable(h, n_l) || !is_stable(g - h, n_r)) return;
        const std::vector<int> left_psi = with_inserted(psi_l, a);
        const std::vector<int> right_psi = with_inserted(psi_r, b);
        for_each_split(kappa, [&](const std::vector<int>& k_l, const std::vector<int>& k_r, const Rational& w_k) {
          for_each_split(rest, [&](const std::vector<int>& c_l, const std::vector<int>& c_r, const Rational& w_c) {
            if (sum(left_psi) + sum(k_l) + sum(c_l) != moduli_dimension(h, n_l)) return;
            const Rational left = eliminate(h, left_psi, k_l, c_l);
            if (left == 0) return;
            glued += w_psi * w_k * w_c * left * eliminate(g - h, right_psi, k_r, c_r);
          });
        });
      });
    }
    boundary += sign * glued;
  }
  bracket += boundary / 2;

  Rational value = bernoulli(l + 1) / factorial(l + 1) * bracket;
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace pshodge
