#pragma once

#include "pshodge/expr.hpp"
#include "pshodge/hodge.hpp"
#include "pshodge/moduli.hpp"
#include "pshodge/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace pshodge {

/// Decoration of one elliptic tail: psi-star^a at the attaching marking on the
/// core and psi-bullet^b on the tail itself (b <= 1 since psi-bullet^2 = 0).
struct Tail {
  int a = 0;
  int b = 0;

  friend bool operator==(const Tail&, const Tail&) = default;
  friend auto operator<=>(const Tail&, const Tail&) = default;
};

/// coeff * G^i_*( core class x tail classes ) on Mbar_{g,n}, where G^i glues i
/// labelled elliptic tails to the core Mbar_{g-i,n+i} at markings n+1..n+i.
/// With no tails this is an ordinary lambda-psi monomial.
struct StratumTerm {
  Rational coeff;
  std::vector<int> core_lambda;  // exponent of lambda_j at j-1 on the core
  std::vector<int> core_psi;     // exponents of psi_1..psi_n on the core
  std::vector<Tail> tails;       // sorted

  int tail_count() const noexcept { return static_cast<int>(tails.size()); }
  /// Degree of the pushed-forward class in the ambient space.
  int codimension() const noexcept;

  friend bool operator==(const StratumTerm&, const StratumTerm&) = default;
};

/// Sign convention for the excess class of a matched pair of tails; the
/// correct one is c_1 = -psi_star - psi_bullet. The flipped variant exists so
/// that self-checks can demonstrate they catch the wrong sign.
enum class ExcessSign { negative, positive };

/// Formal sum of StratumTerms on a fixed ambient Mbar_{g,n}.
///
/// Adding a term normalizes it: tails are sorted (pushforwards along G^i are
/// invariant under relabelling the tails) and the term is dropped when it is
/// zero for structural reasons: a tail with psi-bullet^2, an unstable core,
/// lambda_j with j above the core genus, or a class above the dimension of the
/// core or of the ambient space.
class TautClass {
 public:
  TautClass(int g, int n);

  static TautClass one(int g, int n);
  static TautClass scalar(int g, int n, const Rational& c);
  static TautClass psi(int g, int n, int i);
  /// The stable lambda_j with no boundary correction.
  static TautClass lambda(int g, int n, int j);

  int genus() const noexcept { return g_; }
  int markings() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Terms in canonical order.
  std::vector<StratumTerm> terms() const;

  void add(StratumTerm term);

  TautClass& operator+=(const TautClass& other);
  TautClass& operator-=(const TautClass& other);
  TautClass& operator*=(const Rational& s);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator*(const Rational& s, TautClass a) { return a *= s; }
  friend TautClass operator*(const TautClass& a, const TautClass& b);
  friend bool operator==(const TautClass&, const TautClass&) = default;

  std::string to_string() const;

 private:
  struct Shape {
    std::vector<int> core_lambda;
    std::vector<int> core_psi;
    std::vector<Tail> tails;
    friend auto operator<=>(const Shape&, const Shape&) = default;
    friend bool operator==(const Shape&, const Shape&) = default;
  };

  int g_;
  int n_;
  std::map<Shape, Rational> terms_;
};

/// One summand of lambda_j restricted to a stratum with k new tails:
/// lambda_{core_index} on the core times psi-bullet on every tail t with bullets[t] == 1.
struct LambdaRestriction {
  int core_index = 0;
  std::vector<int> bullets;

  friend bool operator==(const LambdaRestriction&, const LambdaRestriction&) = default;
};

/// lambda_j pulled back to a core with k new elliptic tails:
/// sum_s e_s(psi-bullets) * lambda_{j-s}, using E = L_1 on each tail.
std::vector<LambdaRestriction> restrict_lambda_to_tails(int j, int k);

/// Product of two classes on the same ambient space, by the excess
/// intersection formula for elliptic-tail strata. Throws std::invalid_argument
/// on mismatched ambients.
TautClass class_multiply(const TautClass& a, const TautClass& b, ExcessSign sign = ExcessSign::negative);

/// Integral over Mbar_{g,n}: per term, the core Hodge integral times 1/24 for
/// every tail carrying psi-bullet (a tail without it integrates to 0).
Rational class_integrate(const TautClass& c, HodgeEngine& engine = HodgeEngine::shared());

/// lambda_j + sum_{i=1}^{j} 1/i! G^i_*(p_0^* lambda_{j-i}), the pullback of the
/// pseudostable lambda_j. Throws EmptyModuliError off pseudostable indices.
TautClass hat_lambda(int g, int n, int j);

/// Pullback of the pseudostable ch_l:
/// ch_l(E) - (-1)^l/l! G_*(psi_star^{l-1} - psi_bullet psi_star^{l-2}),
/// with ch_l(E) written in lambda classes.
TautClass t_pullback_ch(int g, int n, int l);

/// Evaluates an expression in the class algebra: lambda_j maps to hat_lambda
/// for the pseudostable space and to the plain lambda_j otherwise.
TautClass to_class(const TautExpr& expr, int g, int n, Space space, ExcessSign sign = ExcessSign::negative);

/// Integral of F(lambda, psi) over the pseudostable moduli space.
Rational ps_hodge_integral(int g, int n, const TautExpr& f, HodgeEngine& engine = HodgeEngine::shared());

/// Integral of F(lambda, psi) over Mbar_{g,n}.
Rational stable_hodge_integral(int g, int n, const TautExpr& f, HodgeEngine& engine = HodgeEngine::shared());

}  // namespace pshodge
