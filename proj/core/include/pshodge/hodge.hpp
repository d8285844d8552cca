#pragma once

#include "pshodge/polynomial.hpp"
#include "pshodge/rational.hpp"
#include "pshodge/wk.hpp"

#include <map>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pshodge {

/// Complete Bell polynomial B_k evaluated at x_1..x_k in any commutative ring
/// with a rational scaling, via B_{k+1} = sum_j C(k,j) x_{j+1} B_{k-j}.
template <class Ring>
Ring bell_evaluate(int k, std::span<const Ring> x, const Ring& one) {
  if (k < 0) throw std::invalid_argument("negative Bell polynomial index");
  if (static_cast<int>(x.size()) < k) throw std::invalid_argument("too few Bell polynomial arguments");
  std::vector<Ring> b{one};
  b.reserve(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m < k; ++m) {
    Ring next = Rational(0) * one;
    for (int j = 0; j <= m; ++j) next += binomial(m, j) * (x[j] * b[m - j]);
    b.push_back(std::move(next));
  }
  return b[k];
}

/// B_k as a polynomial in the variables x_1..x_k.
Polynomial bell_polynomial(int k);

/// lambda_j of a rank-g bundle as a polynomial in ch_1..ch_j (variable l is ch_l).
/// Zero for j > g. Even ch classes are kept; this is a formal identity.
Polynomial lambda_to_ch(int j, int g);

/// ch_l as a polynomial in lambda_1..lambda_l (variable j is lambda_j), by
/// Newton's identities.
Polynomial ch_to_lambda(int l);

/// prod lambda_j^{lambda[j-1]} * prod psi_i^{psi[i-1]} on Mbar_{g,n}, n = psi.size().
struct HodgeMonomial {
  int g = 0;
  std::vector<int> lambda;
  std::vector<int> psi;

  int n() const noexcept { return static_cast<int>(psi.size()); }
  int degree() const noexcept;
};

/// Stable Hodge integrals by Grothendieck-Riemann-Roch.
///
/// A lambda monomial is first rewritten in the odd Chern characters of the
/// Hodge bundle (even ones vanish). Each ch_{2l-1} is then traded for kappa,
/// psi and one-edge boundary terms by Mumford's formula
///
///   ch_{2l-1} = B_{2l}/(2l)! [ kappa_{2l-1} - sum_i psi_i^{2l-1}
///               + 1/2 sum_glue xi_*( sum_{a+b=2l-2} (-1)^a psi'^a psi''^b ) ],
///
/// with the gluing sum over the irreducible map and all ordered separating
/// maps. When no ch factor is left the kappa-psi integral finishes the job.
class HodgeEngine {
 public:
  explicit HodgeEngine(WkEngine& wk) : wk_(wk) {}
  HodgeEngine(const HodgeEngine&) = delete;
  HodgeEngine& operator=(const HodgeEngine&) = delete;

  Rational integral(const HodgeMonomial& m);

  /// prod ch_l * prod kappa_a * prod psi_i on Mbar_{g,n}; ch indices must be odd
  /// to be nonzero.
  Rational ch_kappa_psi_integral(int g, std::vector<int> psi, std::vector<int> kappa, std::vector<int> ch);

  WkEngine& wk() noexcept { return wk_; }
  void clear();

  /// Engine bound to WkEngine::shared().
  static HodgeEngine& shared();

 private:
  const Polynomial& odd_ch_expansion(const std::vector<int>& lambda);
  Rational eliminate(int g, const std::vector<int>& psi, const std::vector<int>& kappa, const std::vector<int>& ch);

  WkEngine& wk_;

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };
  std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, Rational, VecHash> cache_;
  std::shared_mutex expansion_mutex_;
  std::map<std::vector<int>, Polynomial> expansions_;
};

/// Shorthand for HodgeEngine::shared().integral(m).
Rational hodge_integral(const HodgeMonomial& m);

}  // namespace pshodge
