#pragma once

#include "pshodge/hodge.hpp"
#include "pshodge/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pshodge {

/// A partition mu of d and a number m of transposition factors.
struct HurwitzInstance {
  std::vector<int> mu;  // mu_1 >= ... >= mu_l >= 1
  int m = 0;

  int degree() const noexcept;
  int length() const noexcept { return static_cast<int>(mu.size()); }
};

/// Raised when an exhaustive enumeration would exceed the desk-scale bound.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Composition { left_to_right, right_to_left };

/// Points 0..d-1; p[x] is the image of x.
using Permutation = std::vector<int>;

/// Cycles (0..mu_1-1)(mu_1..mu_1+mu_2-1)...
Permutation canonical_permutation(const std::vector<int>& mu);

constexpr int kMaxHurwitzDegree = 6;
constexpr int kMaxHurwitzFactors = 8;

/// Number of m-tuples of transpositions whose product is the target
/// permutation and which generate a group acting transitively on the d points.
/// The target defaults to canonical_permutation(mu); a different target must
/// have cycle type mu. Throws ResourceLimitError beyond d <= 6, m <= 8.
std::uint64_t hurwitz_brute(const HurwitzInstance& inst, Composition order = Composition::left_to_right);
std::uint64_t hurwitz_brute(const HurwitzInstance& inst, const Permutation& target,
                            Composition order = Composition::left_to_right);

/// Upper bound (d(d-1)/2)^m on the number of tuples enumerated.
double hurwitz_enumeration_bound(const HurwitzInstance& inst);

/// Riemann-Hurwitz: m = 2g - 2 + l + |mu|.
int riemann_hurwitz_m(int g, const std::vector<int>& mu);

/// m! prod mu_i^{mu_i+1}/mu_i! * int_{Mbar_{g,l}} (1 - lambda_1 + ... +- lambda_g) / prod (1 - mu_i psi_i).
/// Throws std::domain_error when (g, l) is unstable.
Rational elsv_value(int g, const std::vector<int>& mu, HodgeEngine& engine = HodgeEngine::shared());

/// Partitions of d in non-increasing order.
std::vector<std::vector<int>> partitions(int d);

}  // namespace pshodge
