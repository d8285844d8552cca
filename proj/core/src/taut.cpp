#include "pshodge/taut.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pshodge {

namespace {

int lambda_degree(const std::vector<int>& lambda) {
  int d = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) d += static_cast<int>(j + 1) * lambda[j];
  return d;
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

void strip(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<int> add_vectors(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// All ways of restricting a lambda monomial to a core with k new tails, as
// (core lambda monomial, psi-bullet counts on the new tails) -> multiplicity.
using Restricted = std::map<std::pair<std::vector<int>, std::vector<int>>, Rational>;

Restricted restrict_monomial(const std::vector<int>& lambda, int k) {
  Restricted current;
  if (k == 0) {
    current.emplace(std::make_pair(lambda, std::vector<int>{}), Rational(1));
    return current;
  }
  current.emplace(std::make_pair(std::vector<int>{}, std::vector<int>(static_cast<std::size_t>(k), 0)), Rational(1));
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    const int j = static_cast<int>(idx) + 1;
    const auto pieces = restrict_lambda_to_tails(j, k);
    for (int rep = 0; rep < lambda[idx]; ++rep) {
      Restricted next;
      for (const auto& [state, mult] : current) {
        for (const auto& piece : pieces) {
          std::vector<int> bullets = state.second;
          bool ok = true;
          for (int t = 0; t < k && ok; ++t) {
            bullets[t] += piece.bullets[t];
            ok = bullets[t] <= 1;
          }
          if (!ok) continue;
          std::vector<int> mono = state.first;
          if (piece.core_index > 0) {
            if (static_cast<int>(mono.size()) < piece.core_index) mono.resize(piece.core_index, 0);
            ++mono[piece.core_index - 1];
          }
          next[{std::move(mono), std::move(bullets)}] += mult;
        }
      }
      current = std::move(next);
    }
  }
  return current;
}

void multiply_into(TautClass& out, const StratumTerm& x, const StratumTerm& y, ExcessSign sign) {
  const int ix = x.tail_count();
  const int iy = y.tail_count();
  const Rational excess = sign == ExcessSign::negative ? Rational(-1) : Rational(1);
  const std::vector<int> core_psi = add_vectors(x.core_psi, y.core_psi);

  std::vector<int> match(static_cast<std::size_t>(ix), -1);
  std::vector<bool> used(static_cast<std::size_t>(iy), false);

  auto emit = [&]() {
    std::vector<Tail> tails;
    std::vector<int> x_only;
    std::vector<int> y_only;
    for (int p = 0; p < ix; ++p) {
      if (match[p] >= 0) {
        const Tail& tx = x.tails[p];
        const Tail& ty = y.tails[match[p]];
        tails.push_back({tx.a + ty.a, tx.b + ty.b});
      } else {
        x_only.push_back(p);
      }
    }
    const int matched = static_cast<int>(tails.size());
    for (int p : x_only) tails.push_back(x.tails[p]);
    for (int q = 0; q < iy; ++q) {
      if (!used[q]) {
        y_only.push_back(q);
        tails.push_back(y.tails[q]);
      }
    }
    const int x_only_begin = matched;
    const int y_only_begin = matched + static_cast<int>(x_only.size());

    // x's core sees y's unmatched tails as new degenerations, and vice versa
    const Restricted rx = restrict_monomial(x.core_lambda, static_cast<int>(y_only.size()));
    const Restricted ry = restrict_monomial(y.core_lambda, static_cast<int>(x_only.size()));

    for (const auto& [sx, cx] : rx) {
      for (const auto& [sy, cy] : ry) {
        std::vector<Tail> decorated = tails;
        bool ok = true;
        for (std::size_t t = 0; t < sx.second.size(); ++t) {
          decorated[y_only_begin + t].b += sx.second[t];
        }
        for (std::size_t t = 0; t < sy.second.size(); ++t) {
          decorated[x_only_begin + t].b += sy.second[t];
        }
        for (const Tail& t : decorated) ok = ok && t.b <= 1;
        if (!ok) continue;
        const std::vector<int> lambda = add_vectors(sx.first, sy.first);
        const Rational base = x.coeff * y.coeff * cx * cy;
        // each matched tail carries the excess class +-(psi_star + psi_bullet)
        for (unsigned mask = 0; mask < (1u << matched); ++mask) {
          std::vector<Tail> final_tails = decorated;
          Rational c = base;
          for (int t = 0; t < matched; ++t) {
            if (mask & (1u << t)) {
              ++final_tails[t].b;
            } else {
              ++final_tails[t].a;
            }
            c *= excess;
          }
          out.add(StratumTerm{c, lambda, core_psi, std::move(final_tails)});
        }
      }
    }
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p == ix) {
      emit();
      return;
    }
    match[p] = -1;
    self(self, p + 1);
    for (int q = 0; q < iy; ++q) {
      if (used[q]) continue;
      used[q] = true;
      match[p] = q;
      self(self, p + 1);
      used[q] = false;
      match[p] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

int StratumTerm::codimension() const noexcept {
  int d = lambda_degree(core_lambda) + total(core_psi) + tail_count();
  for (const Tail& t : tails) d += t.a + t.b;
  return d;
}

TautClass::TautClass(int g, int n) : g_(g), n_(n) {
  if (g < 0 || n < 0) throw std::invalid_argument("negative genus or marking count");
}

TautClass TautClass::one(int g, int n) { return scalar(g, n, Rational(1)); }

TautClass TautClass::scalar(int g, int n, const Rational& c) {
  TautClass t(g, n);
  t.add(StratumTerm{c, {}, std::vector<int>(static_cast<std::size_t>(n), 0), {}});
  return t;
}

TautClass TautClass::psi(int g, int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("psi index out of range");
  TautClass t(g, n);
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  p[i - 1] = 1;
  t.add(StratumTerm{Rational(1), {}, std::move(p), {}});
  return t;
}

TautClass TautClass::lambda(int g, int n, int j) {
  if (j < 0) throw std::out_of_range("negative lambda index");
  if (j == 0) return one(g, n);
  TautClass t(g, n);
  std::vector<int> l(static_cast<std::size_t>(j), 0);
  l.back() = 1;
  t.add(StratumTerm{Rational(1), std::move(l), std::vector<int>(static_cast<std::size_t>(n), 0), {}});
  return t;
}

void TautClass::add(StratumTerm term) {
  if (term.coeff == 0) return;
  if (static_cast<int>(term.core_psi.size()) != n_) throw std::invalid_argument("stratum term has the wrong marking count");
  const int i = term.tail_count();
  const int core_g = g_ - i;
  const int core_n = n_ + i;
  if (core_g < 0 || !is_stable(core_g, core_n)) return;
  for (const Tail& t : term.tails) {
    if (t.a < 0 || t.b < 0 || t.b > 1) return;
  }
  for (int e : term.core_psi) {
    if (e < 0) return;
  }
  strip(term.core_lambda);
  for (std::size_t j = 0; j < term.core_lambda.size(); ++j) {
    if (term.core_lambda[j] < 0) return;
    if (term.core_lambda[j] > 0 && static_cast<int>(j + 1) > core_g) return;
  }
  int core_degree = lambda_degree(term.core_lambda) + total(term.core_psi);
  for (const Tail& t : term.tails) core_degree += t.a;
  if (core_degree > moduli_dimension(core_g, core_n)) return;
  if (term.codimension() > moduli_dimension(g_, n_)) return;

  std::sort(term.tails.begin(), term.tails.end());
  Shape shape{std::move(term.core_lambda), std::move(term.core_psi), std::move(term.tails)};
  auto [it, inserted] = terms_.try_emplace(std::move(shape), term.coeff);
  if (!inserted) {
    it->second += term.coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<StratumTerm> TautClass::terms() const {
  std::vector<StratumTerm> out;
  out.reserve(terms_.size());
  for (const auto& [shape, c] : terms_) out.push_back(StratumTerm{c, shape.core_lambda, shape.core_psi, shape.tails});
  return out;
}

TautClass& TautClass::operator+=(const TautClass& other) {
  if (other.g_ != g_ || other.n_ != n_) throw std::invalid_argument("adding classes on different moduli spaces");
  for (const auto& [shape, c] : other.terms_) add(StratumTerm{c, shape.core_lambda, shape.core_psi, shape.tails});
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& other) {
  if (other.g_ != g_ || other.n_ != n_) throw std::invalid_argument("subtracting classes on different moduli spaces");
  for (const auto& [shape, c] : other.terms_) add(StratumTerm{-c, shape.core_lambda, shape.core_psi, shape.tails});
  return *this;
}

TautClass& TautClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [shape, c] : terms_) c *= s;
  return *this;
}

TautClass operator*(const TautClass& a, const TautClass& b) { return class_multiply(a, b); }

std::string TautClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [shape, c] : terms_) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = c < 0 ? Rational(-c) : c;
    std::vector<std::string> factors;
    for (std::size_t j = 0; j < shape.core_lambda.size(); ++j) {
      if (shape.core_lambda[j] == 0) continue;
      std::string f = "lambda" + std::to_string(j + 1);
      if (shape.core_lambda[j] > 1) f += "^" + std::to_string(shape.core_lambda[j]);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < shape.core_psi.size(); ++i) {
      if (shape.core_psi[i] == 0) continue;
      std::string f = "psi" + std::to_string(i + 1);
      if (shape.core_psi[i] > 1) f += "^" + std::to_string(shape.core_psi[i]);
      factors.push_back(f);
    }
    std::string body;
    for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    if (shape.tails.empty()) {
      if (mag != 1 || body.empty()) os << pshodge::to_string(mag) << (body.empty() ? "" : "*");
      os << body;
    } else {
      if (mag != 1) os << pshodge::to_string(mag) << "*";
      os << "G" << shape.tails.size() << "[" << (body.empty() ? "1" : body) << " |";
      for (const Tail& t : shape.tails) os << " (" << t.a << "," << t.b << ")";
      os << "]";
    }
  }
  return os.str();
}

std::vector<LambdaRestriction> restrict_lambda_to_tails(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("negative index in lambda restriction");
  std::vector<LambdaRestriction> out;
  // subsets T of the k tails with |T| <= j, in increasing bitmask order
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    const int s = std::popcount(mask);
    if (s > j) continue;
    LambdaRestriction r;
    r.core_index = j - s;
    r.bullets.assign(static_cast<std::size_t>(k), 0);
    for (int t = 0; t < k; ++t) r.bullets[t] = (mask >> t) & 1u;
    out.push_back(std::move(r));
  }
  return out;
}

TautClass class_multiply(const TautClass& a, const TautClass& b, ExcessSign sign) {
  if (a.genus() != b.genus() || a.markings() != b.markings()) {
    throw std::invalid_argument("class_multiply: classes live on different moduli spaces");
  }
  TautClass out(a.genus(), a.markings());
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (const auto& x : ta) {
    for (const auto& y : tb) multiply_into(out, x, y, sign);
  }
  return out;
}

Rational class_integrate(const TautClass& c, HodgeEngine& engine) {
  const int g = c.genus();
  const int n = c.markings();
  if (!is_stable(g, n)) return 0;
  const int dim = moduli_dimension(g, n);
  const Rational tail_value(1, 24);
  Rational sum = 0;
  for (const StratumTerm& t : c.terms()) {
    if (t.codimension() != dim) continue;
    bool all_bullets = true;
    for (const Tail& tail : t.tails) all_bullets = all_bullets && tail.b == 1;
    if (!all_bullets) continue;
    HodgeMonomial core{g - t.tail_count(), t.core_lambda, t.core_psi};
    Rational tails = 1;
    for (const Tail& tail : t.tails) {
      core.psi.push_back(tail.a);
      tails *= tail_value;
    }
    sum += t.coeff * engine.integral(core) * tails;
  }
  return sum;
}

TautClass hat_lambda(int g, int n, int j) {
  require_nonempty(g, n, Space::pseudostable);
  if (j < 0 || j > g) throw std::out_of_range("hat_lambda index outside 0..g");
  TautClass out = TautClass::lambda(g, n, j);
  for (int i = 1; i <= j; ++i) {
    std::vector<int> core_lambda;
    if (j - i > 0) {
      core_lambda.assign(static_cast<std::size_t>(j - i), 0);
      core_lambda.back() = 1;
    }
    out.add(StratumTerm{Rational(1) / factorial(i), std::move(core_lambda), std::vector<int>(static_cast<std::size_t>(n), 0),
                        std::vector<Tail>(static_cast<std::size_t>(i), Tail{0, 0})});
  }
  return out;
}

TautClass t_pullback_ch(int g, int n, int l) {
  if (l < 1) throw std::out_of_range("t_pullback_ch needs l >= 1");
  TautClass out(g, n);
  const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  const Polynomial ch = ch_to_lambda(l);
  for (const auto& [exps, c] : ch.terms()) out.add(StratumTerm{c, exps, zeros, {}});
  const Rational correction = -(l % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(l);
  out.add(StratumTerm{correction, {}, zeros, {Tail{l - 1, 0}}});
  if (l >= 2) out.add(StratumTerm{-correction, {}, zeros, {Tail{l - 2, 1}}});
  return out;
}

TautClass to_class(const TautExpr& expr, int g, int n, Space space, ExcessSign sign) {
  switch (expr.kind) {
    case TautExpr::Kind::literal:
      return TautClass::scalar(g, n, expr.value);
    case TautExpr::Kind::lambda:
      if (expr.index < 1 || expr.index > g) throw std::out_of_range("lambda index out of range");
      return space == Space::pseudostable ? hat_lambda(g, n, expr.index) : TautClass::lambda(g, n, expr.index);
    case TautExpr::Kind::psi:
      return TautClass::psi(g, n, expr.index);
    case TautExpr::Kind::sum:
      return to_class(expr.children[0], g, n, space, sign) + to_class(expr.children[1], g, n, space, sign);
    case TautExpr::Kind::difference:
      return to_class(expr.children[0], g, n, space, sign) - to_class(expr.children[1], g, n, space, sign);
    case TautExpr::Kind::product:
      return class_multiply(to_class(expr.children[0], g, n, space, sign),
                            to_class(expr.children[1], g, n, space, sign), sign);
    case TautExpr::Kind::power: {
      const TautClass base = to_class(expr.children[0], g, n, space, sign);
      TautClass result = TautClass::one(g, n);
      for (int k = 0; k < expr.exponent; ++k) {
        result = class_multiply(result, base, sign);
        if (result.is_zero()) break;
      }
      return result;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Rational ps_hodge_integral(int g, int n, const TautExpr& f, HodgeEngine& engine) {
  require_nonempty(g, n, Space::pseudostable);
  validate(f, g, n);
  return class_integrate(to_class(f, g, n, Space::pseudostable), engine);
}

Rational stable_hodge_integral(int g, int n, const TautExpr& f, HodgeEngine& engine) {
  require_nonempty(g, n, Space::stable);
  validate(f, g, n);
  return class_integrate(to_class(f, g, n, Space::stable), engine);
}

}  // namespace pshodge
