#pragma once

#include "pshodge/hodge.hpp"
#include "pshodge/taut.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pshodge {

struct SelfcheckOptions {
  /// Excess sign used by the strata-algebra suites; flipping it must make the
  /// hat-lambda_1^2 suite fail.
  ExcessSign excess = ExcessSign::negative;
  std::uint64_t seed = 20240611;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Desk-scale property suites over every module. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options, HodgeEngine& engine);

// Random generators shared by the self-check and the test suites.

/// Uniformly random psi exponent vector of length n and the given total degree.
std::vector<int> random_psi_exponents(std::mt19937_64& rng, int n, int degree);

/// Random class on Mbar_{g,n} with up to max_terms terms and at most max_tails
/// tails per term; coefficients are small nonzero rationals.
TautClass random_taut_class(std::mt19937_64& rng, int g, int n, int max_tails, int max_terms);

/// The expansion lambda_1^2 + 2 G^1_*(lambda_1) + G^1_*(psi_bullet) - G^1_*(psi_star) + G^2_*(1)
/// of hat_lambda_1^2 on Mbar_{g,n}, written out term by term.
TautClass hat_lambda1_squared_expected(int g, int n);

/// (1/j!) B_j(x + y) assembled from t_pullback_ch in the class algebra, where
/// x_l + y_l = (-1)^{l-1} (l-1)! l! T^* ch_l.
TautClass bell_assembled_hat_lambda(int g, int n, int j, ExcessSign sign = ExcessSign::negative);

/// Both sides of (k+1) hat_lambda_{k+1} = sum_{j<=k} (x_{j+1} + y_{j+1})/j! * hat_lambda_{k-j}.
std::pair<TautClass, TautClass> recursion_identity_sides(int g, int n, int k, ExcessSign sign = ExcessSign::negative);

}  // namespace pshodge
