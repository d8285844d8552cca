#include "pshodge/selfcheck.hpp"

#include "pshodge/hurwitz.hpp"
#include "pshodge/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace pshodge {

std::vector<int> random_psi_exponents(std::mt19937_64& rng, int n, int degree) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  if (n == 0) return e;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < degree; ++k) ++e[pick(rng)];
  return e;
}

TautClass random_taut_class(std::mt19937_64& rng, int g, int n, int max_tails, int max_terms) {
  TautClass out(g, n);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> numerator(-4, 4);
  std::uniform_int_distribution<int> denominator(1, 3);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    const int tails = std::uniform_int_distribution<int>(0, std::min(max_tails, g))(rng);
    const int core_g = g - tails;
    StratumTerm term;
    int num = 0;
    while (num == 0) num = numerator(rng);
    term.coeff = Rational(num, denominator(rng));
    if (core_g > 0 && coin(rng)) {
      const int j = std::uniform_int_distribution<int>(1, core_g)(rng);
      term.core_lambda.assign(static_cast<std::size_t>(j), 0);
      term.core_lambda.back() = 1;
    }
    term.core_psi.assign(static_cast<std::size_t>(n), 0);
    for (int& e : term.core_psi) e = small(rng) == 2 ? 1 : 0;
    for (int k = 0; k < tails; ++k) term.tails.push_back(Tail{small(rng) == 2 ? 1 : 0, coin(rng)});
    out.add(std::move(term));
  }
  return out;
}

TautClass hat_lambda1_squared_expected(int g, int n) {
  const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  TautClass c(g, n);
  c.add({Rational(1), {2}, zeros, {}});
  c.add({Rational(2), {1}, zeros, {Tail{0, 0}}});
  c.add({Rational(1), {}, zeros, {Tail{0, 1}}});
  c.add({Rational(-1), {}, zeros, {Tail{1, 0}}});
  c.add({Rational(1), {}, zeros, {Tail{0, 0}, Tail{0, 0}}});
  return c;
}

namespace {

std::vector<TautClass> shifted_ch(int g, int n) {
  std::vector<TautClass> xy;
  for (int l = 1; l <= g; ++l) {
    Rational scale = factorial(l - 1) * factorial(l);
    if (l % 2 == 0) scale = -scale;
    xy.push_back(scale * t_pullback_ch(g, n, l));
  }
  return xy;
}

}  // namespace

TautClass bell_assembled_hat_lambda(int g, int n, int j, ExcessSign sign) {
  const std::vector<TautClass> xy = shifted_ch(g, n);
  const TautClass one = TautClass::one(g, n);
  // bell_evaluate uses the default product; redo the recursion with the chosen sign
  std::vector<TautClass> b{one};
  for (int m = 0; m < j; ++m) {
    TautClass next(g, n);
    for (int i = 0; i <= m; ++i) next += binomial(m, i) * class_multiply(xy[i], b[m - i], sign);
    b.push_back(std::move(next));
  }
  return Rational(1) / factorial(j) * b[j];
}

std::pair<TautClass, TautClass> recursion_identity_sides(int g, int n, int k, ExcessSign sign) {
  const std::vector<TautClass> xy = shifted_ch(g, n);
  TautClass lhs = Rational(k + 1) * hat_lambda(g, n, k + 1);
  TautClass rhs(g, n);
  for (int j = 0; j <= k; ++j) {
    const TautClass rest = k - j == 0 ? TautClass::one(g, n) : hat_lambda(g, n, k - j);
    rhs += Rational(1) / factorial(j) * class_multiply(xy[j], rest, sign);
  }
  return {std::move(lhs), std::move(rhs)};
}

namespace {

struct Suite {
  std::string name;
  std::function<std::string()> run;  // empty string means pass
};

TautClass psi_monomial(int g, int n, const std::vector<int>& e) {
  TautClass c(g, n);
  c.add({Rational(1), {}, e, {}});
  return c;
}

std::string one_pointed(HodgeEngine& engine) {
  for (int g = 1; g <= 6; ++g) {
    const Rational expected = Rational(1) / (power(Rational(24), g) * factorial(g));
    if (engine.wk().integral(g, {3 * g - 2}) != expected) return "mismatch at g=" + std::to_string(g);
  }
  return {};
}

std::string string_dilaton(HodgeEngine& engine) {
  WkEngine& wk = engine.wk();
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 5; ++n) {
      const int dim = moduli_dimension(g, n);
      if (!is_stable(g, n) || dim < 0 || dim > 9) continue;
      // every psi vector with a 0 in the first slot, sorted tail
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      std::function<std::string(int, int, int)> rec = [&](int i, int remaining, int max_v) -> std::string {
        if (i == n) {
          if (remaining != 0) return {};
          std::vector<int> with_zero = d;
          with_zero.push_back(0);
          Rational lhs = wk.integral(g, with_zero);
          Rational rhs = 0;
          for (int j = 0; j < n; ++j) {
            if (d[j] == 0) continue;
            std::vector<int> lowered = d;
            --lowered[j];
            rhs += wk.integral(g, lowered);
          }
          if (lhs != rhs) return "string equation fails at g=" + std::to_string(g);
          std::vector<int> with_one = d;
          with_one.push_back(1);
          const Rational dil = wk.integral(g, with_one);
          if (dil != Rational(2 * g - 2 + n) * wk.integral(g, d)) return "dilaton fails at g=" + std::to_string(g);
          return {};
        }
        for (int v = 0; v <= std::min(max_v, remaining); ++v) {
          d[i] = v;
          if (auto err = rec(i + 1, remaining - v, v); !err.empty()) return err;
        }
        return {};
      };
      if (auto err = rec(0, dim + 1, dim + 1); !err.empty()) return err;
    }
  }
  return {};
}

// degree-d part of (sum lambda_i)(sum (-1)^i lambda_i) as (lambda exponent vector, coeff)
std::vector<std::pair<std::vector<int>, Rational>> mumford_part(int g, int d) {
  std::map<std::vector<int>, Rational> acc;
  for (int i = 0; i <= std::min(g, d); ++i) {
    const int j = d - i;
    if (j > g) continue;
    std::vector<int> e(static_cast<std::size_t>(g), 0);
    if (i > 0) ++e[i - 1];
    if (j > 0) ++e[j - 1];
    acc[e] += j % 2 == 0 ? Rational(1) : Rational(-1);
  }
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.emplace_back(e, c);
  }
  return out;
}

void for_each_psi_vector(int n, int degree, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (n == 0) {
      if (remaining == 0) f(e);
      return;
    }
    if (i == n - 1) {
      e[i] = remaining;
      f(e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, degree);
}

std::string mumford_relations(HodgeEngine& engine, int g_max, int n_max) {
  for (int g = 1; g <= g_max; ++g) {
    for (int n = 0; n <= n_max; ++n) {
      if (!is_stable(g, n)) continue;
      const int dim = moduli_dimension(g, n);
      for (int d = 1; d <= std::min(2 * g, dim); ++d) {
        const auto part = mumford_part(g, d);
        std::string err;
        for_each_psi_vector(n, dim - d, [&](const std::vector<int>& psi) {
          if (!err.empty()) return;
          Rational sum = 0;
          for (const auto& [lambda, c] : part) sum += c * engine.integral(HodgeMonomial{g, lambda, psi});
          if (sum != 0) err = "degree " + std::to_string(d) + " relation fails on Mbar_{" + std::to_string(g) + "," +
                              std::to_string(n) + "}";
        });
        if (!err.empty()) return err;
      }
    }
  }
  return {};
}

std::string linear_hodge(HodgeEngine& engine, int g_max, int n_max) {
  for (int g = 1; g <= g_max; ++g) {
    for (int n = 0; n <= n_max; ++n) {
      if (!is_pseudostable(g, n)) continue;
      const int dim = moduli_dimension(g, n);
      for (int j = 1; j <= g; ++j) {
        const TautClass hat = hat_lambda(g, n, j);
        const TautClass plain = TautClass::lambda(g, n, j);
        std::string err;
        for_each_psi_vector(n, dim - j, [&](const std::vector<int>& psi) {
          if (!err.empty()) return;
          const TautClass mono = psi_monomial(g, n, psi);
          if (class_integrate(hat * mono, engine) != class_integrate(plain * mono, engine)) {
            err = "lambda_" + std::to_string(j) + " on (" + std::to_string(g) + "," + std::to_string(n) + ")";
          }
        });
        if (!err.empty()) return err;
      }
    }
  }
  return {};
}

std::string mumford_failure(HodgeEngine& engine, ExcessSign sign) {
  for (int g = 2; g <= 4; ++g) {
    for (int n = 1; n <= 2; ++n) {
      const TautExpr f = parse_expression("(2*lambda2 - lambda1^2)*psi1^" + std::to_string(3 * g - 5 + n));
      const Rational value = class_integrate(to_class(f, g, n, Space::pseudostable, sign), engine);
      const Rational expected = Rational(-1) / (power(Rational(24), g) * factorial(g - 1));
      if (value != expected) return "g=" + std::to_string(g) + " n=" + std::to_string(n) + " gave " + to_string(value);
    }
  }
  return {};
}

std::string hat_lambda_square(ExcessSign sign) {
  for (auto [g, n] : {std::pair{2, 1}, std::pair{3, 2}}) {
    const TautClass h = hat_lambda(g, n, 1);
    const TautClass sq = class_multiply(h, h, sign);
    if (sq != hat_lambda1_squared_expected(g, n)) return "expansion differs on (" + std::to_string(g) + "," + std::to_string(n) + "): " + sq.to_string();
  }
  return {};
}

std::string algebra_properties(std::mt19937_64& rng, ExcessSign sign) {
  for (int trial = 0; trial < 30; ++trial) {
    const int g = std::uniform_int_distribution<int>(2, 4)(rng);
    const int n = std::uniform_int_distribution<int>(1, 2)(rng);
    const TautClass a = random_taut_class(rng, g, n, 2, 3);
    const TautClass b = random_taut_class(rng, g, n, 2, 3);
    const TautClass c = random_taut_class(rng, g, n, 2, 3);
    if (class_multiply(a, b, sign) != class_multiply(b, a, sign)) return "commutativity fails";
    if (class_multiply(class_multiply(a, b, sign), c, sign) != class_multiply(a, class_multiply(b, c, sign), sign)) {
      return "associativity fails";
    }
  }
  return {};
}

std::string bell_consistency(HodgeEngine& engine, std::mt19937_64& rng, ExcessSign sign) {
  const int g = 3;
  const int n = 2;
  const int dim = moduli_dimension(g, n);
  for (int j = 1; j <= g; ++j) {
    const TautClass assembled = bell_assembled_hat_lambda(g, n, j, sign);
    const TautClass hat = hat_lambda(g, n, j);
    for (int trial = 0; trial < 5; ++trial) {
      const TautClass mono = psi_monomial(g, n, random_psi_exponents(rng, n, dim - j));
      if (class_integrate(assembled * mono, engine) != class_integrate(hat * mono, engine)) {
        return "B_" + std::to_string(j) + " disagrees with hat_lambda_" + std::to_string(j);
      }
    }
  }
  return {};
}

std::string recursion_identity(HodgeEngine& engine, std::mt19937_64& rng, ExcessSign sign) {
  const int g = 3;
  const int n = 1;
  const int dim = moduli_dimension(g, n);
  for (int k = 0; k < g; ++k) {
    const auto [lhs, rhs] = recursion_identity_sides(g, n, k, sign);
    for (int trial = 0; trial < 5; ++trial) {
      const TautClass mono = psi_monomial(g, n, random_psi_exponents(rng, n, dim - k - 1));
      if (class_integrate(lhs * mono, engine) != class_integrate(rhs * mono, engine)) {
        return "k=" + std::to_string(k) + " sides differ";
      }
    }
  }
  return {};
}

std::string elsv_agreement(HodgeEngine& engine) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : partitions(d)) {
      for (int g = 0;; ++g) {
        const int m = riemann_hurwitz_m(g, mu);
        if (m > 7) break;
        if (!is_stable(g, static_cast<int>(mu.size()))) continue;
        const auto brute = hurwitz_brute(HurwitzInstance{mu, m});
        if (Rational(brute) != elsv_value(g, mu, engine)) return "mismatch at g=" + std::to_string(g) + ", d=" + std::to_string(d);
      }
    }
  }
  return {};
}

std::string kappa_order(HodgeEngine& engine, std::mt19937_64& rng) {
  WkEngine& wk = engine.wk();
  if (wk.kappa_psi_integral({1, {0}, {1}}) != Rational(1, 24)) return "kappa_1 on Mbar_{1,1} is not 1/24";
  for (int trial = 0; trial < 20; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 2)(rng);
    const int n = std::uniform_int_distribution<int>(g == 0 ? 3 : 1, 3)(rng);
    const int dim = moduli_dimension(g, n);
    std::vector<int> kappa;
    int used = 0;
    while (used < dim && kappa.size() < 3) {
      const int a = std::uniform_int_distribution<int>(1, dim - used)(rng);
      kappa.push_back(a);
      used += a;
    }
    KappaPsiMonomial m{g, random_psi_exponents(rng, n, dim - used), kappa};
    const Rational reference = wk.kappa_psi_integral_in_order(m);
    std::sort(m.kappa.begin(), m.kappa.end());
    do {
      if (wk.kappa_psi_integral_in_order(m) != reference) return "elimination order changes the value";
    } while (std::next_permutation(m.kappa.begin(), m.kappa.end()));
  }
  return {};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options, HodgeEngine& engine) {
  std::mt19937_64 rng(options.seed);
  const ExcessSign sign = options.excess;
  const std::vector<Suite> suites{
      {"one-pointed psi integrals", [&] { return one_pointed(engine); }},
      {"string and dilaton equations", [&] { return string_dilaton(engine); }},
      {"kappa elimination order", [&] { return kappa_order(engine, rng); }},
      {"Mumford relations (stable)", [&] { return mumford_relations(engine, 3, 2); }},
      {"linear Hodge equality", [&] { return linear_hodge(engine, 3, 2); }},
      {"hat-lambda_1^2 expansion", [&] { return hat_lambda_square(sign); }},
      {"Mumford failure series", [&] { return mumford_failure(engine, sign); }},
      {"strata algebra commutativity/associativity", [&] { return algebra_properties(rng, sign); }},
      {"Bell consistency", [&] { return bell_consistency(engine, rng, sign); }},
      {"Bell recursion identity", [&] { return recursion_identity(engine, rng, sign); }},
      {"ELSV agreement", [&] { return elsv_agreement(engine); }},
  };
  std::vector<SuiteResult> results;
  for (const auto& suite : suites) {
    SuiteResult r{suite.name, false, {}};
    try {
      r.detail = suite.run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pshodge
