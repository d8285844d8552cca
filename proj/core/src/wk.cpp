#include "pshodge/wk.hpp"

#include "multiset.hpp"
#include "pshodge/moduli.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace pshodge {

using detail::for_each_split;
using detail::sum;
using detail::with_inserted;

WKKey WKKey::canonical(int g, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  return WKKey{g, std::move(d)};
}

int WKKey::degree() const noexcept { return sum(d); }

std::size_t WKKeyHash::operator()(const WKKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.g);
  for (int x : key.d) h = h * 1000003u ^ std::hash<int>{}(x + 7);
  return h;
}

WkEngine& WkEngine::shared() {
  static WkEngine engine;
  return engine;
}

Rational wk_integral(int g, std::vector<int> d) { return WkEngine::shared().integral(g, std::move(d)); }

Rational WkEngine::integral(const WKKey& key) {
  if (!std::is_sorted(key.d.begin(), key.d.end())) return integral(WKKey::canonical(key.g, key.d));
  const int n = key.n();
  if (!is_stable(key.g, n)) return 0;
  if (!key.d.empty() && key.d.front() < 0) return 0;
  if (key.degree() != moduli_dimension(key.g, n)) return 0;
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Rational value = compute(key);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

Rational WkEngine::compute(const WKKey& key) {
  const int g = key.g;
  const int n = key.n();
  const std::vector<int>& d = key.d;

  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);
  if (d.front() == 0) {
    // string equation
    std::vector<int> rest(d.begin() + 1, d.end());
    Rational total = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0 || (j > 0 && rest[j] == rest[j - 1])) continue;
      const auto count = std::count(rest.begin(), rest.end(), rest[j]);
      std::vector<int> lowered = rest;
      --lowered[j];
      total += Rational(static_cast<long>(count)) * integral(WKKey::canonical(g, std::move(lowered)));
    }
    return total;
  }
  if (d.front() == 1) {
    // dilaton equation
    std::vector<int> rest(d.begin() + 1, d.end());
    return Rational(2 * g - 2 + n - 1) * integral(WKKey{g, std::move(rest)});
  }
  return dvv(key);
}

// (2k+3)!! <tau_{k+1} tau_S>_g =
//     sum_{j in S} (2k+2d_j+1)!!/(2d_j-1)!! <tau_{d_j+k} tau_{S-j}>_g
//   + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! ( <tau_r tau_s tau_S>_{g-1}
//                                        + sum <tau_r tau_I>_{g1} <tau_s tau_J>_{g2} )
Rational WkEngine::dvv(const WKKey& key) {
  const int g = key.g;
  const int k = key.d.back() - 1;
  const std::vector<int> rest(key.d.begin(), key.d.end() - 1);

  Rational first = 0;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (j > 0 && rest[j] == rest[j - 1]) continue;
    const auto count = std::count(rest.begin(), rest.end(), rest[j]);
    std::vector<int> raised = rest;
    raised[j] += k;
    const int dj = rest[j];
    first += Rational(static_cast<long>(count)) * double_factorial_odd(k + dj + 1) /
             double_factorial_odd(dj) * integral(WKKey::canonical(g, std::move(raised)));
  }

  Rational second = 0;
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    const Rational weight = double_factorial_odd(r + 1) * double_factorial_odd(s + 1);
    Rational bracket = 0;
    if (g >= 1) bracket += integral(WKKey{g - 1, with_inserted(with_inserted(rest, r), s)});
    for (int g1 = 0; g1 <= g; ++g1) {
      for_each_split(rest, [&](const std::vector<int>& left, const std::vector<int>& right, const Rational& mult) {
        const int n1 = static_cast<int>(left.size()) + 1;
        if (!is_stable(g1, n1) || r + sum(left) != moduli_dimension(g1, n1)) return;
        const Rational a = integral(WKKey{g1, with_inserted(left, r)});
        if (a == 0) return;
        bracket += mult * a * integral(WKKey{g - g1, with_inserted(right, s)});
      });
    }
    second += weight * bracket;
  }
  return (first + second / 2) / double_factorial_odd(k + 2);
}

Rational WkEngine::kappa_psi_integral(const KappaPsiMonomial& m) {
  std::vector<int> psi = m.psi;
  std::vector<int> kappa = m.kappa;
  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());
  return kappa_eliminate(m.g, std::move(psi), std::move(kappa), true);
}

Rational WkEngine::kappa_psi_integral_in_order(const KappaPsiMonomial& m) {
  return kappa_eliminate(m.g, m.psi, m.kappa, false);
}

// <kappa_{b1} ... kappa_{bm} prod tau>_{g,n}
//   = sum_{S subset {2..m}} (-1)^|S| <tau_{b1+1+sum_S b} prod_{j not in S} kappa_{bj} prod tau>_{g,n+1}
Rational WkEngine::kappa_eliminate(int g, std::vector<int> psi, std::vector<int> kappa, bool canonical) {
  if (kappa.empty()) return integral(g, std::move(psi));
  const int n = static_cast<int>(psi.size());
  if (!is_stable(g, n)) return 0;
  if (sum(psi) + sum(kappa) != moduli_dimension(g, n)) return 0;
  for (int a : kappa) {
    if (a < 1) return 0;
  }

  WKKey memo_key;
  if (canonical) {
    memo_key.g = g;
    memo_key.d = psi;
    memo_key.d.push_back(-1);
    memo_key.d.insert(memo_key.d.end(), kappa.begin(), kappa.end());
    std::shared_lock lock(kappa_mutex_);
    if (auto it = kappa_cache_.find(memo_key); it != kappa_cache_.end()) return it->second;
  }

  const int b1 = kappa.front();
  const std::vector<int> others(kappa.begin() + 1, kappa.end());
  const std::size_t m = others.size();
  Rational total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    int exponent = b1 + 1;
    int sign = 1;
    std::vector<int> kept;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::size_t{1} << j)) {
        exponent += others[j];
        sign = -sign;
      } else {
        kept.push_back(others[j]);
      }
    }
    std::vector<int> new_psi = psi;
    new_psi.push_back(exponent);
    if (canonical) std::sort(new_psi.begin(), new_psi.end());
    total += Rational(sign) * kappa_eliminate(g, std::move(new_psi), std::move(kept), canonical);
  }

  if (canonical) {
    std::unique_lock lock(kappa_mutex_);
    kappa_cache_.try_emplace(std::move(memo_key), total);
  }
  return total;
}

std::vector<std::pair<WKKey, Rational>> WkEngine::snapshot() const {
  std::vector<std::pair<WKKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(cache_.begin(), cache_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.g != b.first.g) return a.first.g < b.first.g;
    if (a.first.n() != b.first.n()) return a.first.n() < b.first.n();
    return a.first.d < b.first.d;
  });
  return out;
}

void WkEngine::seed(std::span<const std::pair<WKKey, Rational>> entries) {
  std::unique_lock lock(mutex_);
  for (const auto& [key, value] : entries) cache_.try_emplace(WKKey::canonical(key.g, key.d), value);
}

std::size_t WkEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void WkEngine::clear() {
  {
    std::unique_lock lock(mutex_);
    cache_.clear();
  }
  std::unique_lock lock(kappa_mutex_);
  kappa_cache_.clear();
}

}  // namespace pshodge
