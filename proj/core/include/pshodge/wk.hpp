#pragma once

#include "pshodge/rational.hpp"

#include <compare>
#include <cstddef>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pshodge {

/// Genus plus a sorted multiset of psi exponents; names <tau_{d1}...tau_{dn}>_g.
struct WKKey {
  int g = 0;
  std::vector<int> d;

  /// Sorts the exponents so that permuted inputs share one key.
  static WKKey canonical(int g, std::vector<int> d);

  int n() const noexcept { return static_cast<int>(d.size()); }
  int degree() const noexcept;

  friend bool operator==(const WKKey&, const WKKey&) = default;
  friend auto operator<=>(const WKKey&, const WKKey&) = default;
};

struct WKKeyHash {
  std::size_t operator()(const WKKey& key) const noexcept;
};

/// prod kappa_{a} * prod psi_i^{e_i} on Mbar_{g,n}; n is psi.size().
struct KappaPsiMonomial {
  int g = 0;
  std::vector<int> psi;
  std::vector<int> kappa;

  int n() const noexcept { return static_cast<int>(psi.size()); }
};

/// Pure psi and kappa-psi intersection numbers on Mbar_{g,n}.
///
/// Values come from the Witten-Kontsevich theorem, evaluated with the string
/// and dilaton equations where they apply and the DVV (Virasoro) recursion
/// otherwise. Unstable (g,n) and degree mismatches give 0. Lookups take a
/// shared lock; insertions are serialized, so concurrent callers are safe.
class WkEngine {
 public:
  WkEngine() = default;
  WkEngine(const WkEngine&) = delete;
  WkEngine& operator=(const WkEngine&) = delete;

  Rational integral(const WKKey& key);
  Rational integral(int g, std::vector<int> d) { return integral(WKKey::canonical(g, std::move(d))); }

  /// kappa classes follow kappa_a = pi_*(psi_{n+1}^{a+1}).
  Rational kappa_psi_integral(const KappaPsiMonomial& m);

  /// Same integral, but at every level the first remaining kappa factor is the
  /// one eliminated and no sorting happens. Exists so the elimination order can
  /// be varied from outside.
  Rational kappa_psi_integral_in_order(const KappaPsiMonomial& m);

  /// All memoized pure-psi values, sorted by key.
  std::vector<std::pair<WKKey, Rational>> snapshot() const;

  /// Adds values to the cache; existing entries are left untouched.
  void seed(std::span<const std::pair<WKKey, Rational>> entries);

  std::size_t cache_size() const;
  void clear();

  /// Process-wide engine used by the default HodgeEngine.
  static WkEngine& shared();

 private:
  Rational compute(const WKKey& key);
  Rational dvv(const WKKey& key);
  Rational kappa_eliminate(int g, std::vector<int> psi, std::vector<int> kappa, bool canonical);

  mutable std::shared_mutex mutex_;
  std::unordered_map<WKKey, Rational, WKKeyHash> cache_;

  mutable std::shared_mutex kappa_mutex_;
  std::unordered_map<WKKey, Rational, WKKeyHash> kappa_cache_;
};

/// Shorthand for WkEngine::shared().integral(g, d).
Rational wk_integral(int g, std::vector<int> d);

}  // namespace pshodge
