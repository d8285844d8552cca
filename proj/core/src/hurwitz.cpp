#include "pshodge/hurwitz.hpp"

#include "pshodge/moduli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

namespace pshodge {

int HurwitzInstance::degree() const noexcept { return std::accumulate(mu.begin(), mu.end(), 0); }

Permutation canonical_permutation(const std::vector<int>& mu) {
  Permutation p;
  int start = 0;
  for (int part : mu) {
    for (int k = 0; k < part; ++k) p.push_back(start + (k + 1) % part);
    start += part;
  }
  return p;
}

namespace {

void validate_instance(const HurwitzInstance& inst) {
  if (inst.mu.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i < inst.mu.size(); ++i) {
    if (inst.mu[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && inst.mu[i] > inst.mu[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
  if (inst.m < 0) throw std::invalid_argument("negative number of transpositions");
  if (inst.degree() > kMaxHurwitzDegree || inst.m > kMaxHurwitzFactors) {
    throw ResourceLimitError("Hurwitz enumeration refused: d=" + std::to_string(inst.degree()) +
                             ", m=" + std::to_string(inst.m) + " exceeds d <= " +
                             std::to_string(kMaxHurwitzDegree) + ", m <= " + std::to_string(kMaxHurwitzFactors));
  }
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> type;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
      seen[y] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

constexpr int kMaxPoints = kMaxHurwitzDegree;
using Perm = std::array<std::int8_t, kMaxPoints>;

struct Enumerator {
  int d;
  int m;
  Composition order;
  Perm target;
  std::vector<std::pair<int, int>> transpositions;
  std::uint64_t count = 0;

  // components: label per point; merging relabels
  void run() {
    Perm identity{};
    for (int x = 0; x < d; ++x) identity[x] = static_cast<std::int8_t>(x);
    Perm labels = identity;
    if (m == 0) {
      if (identity == target && d == 1) count = 1;
      return;
    }
    descend(0, identity, labels, d);
  }

  // applies the transposition (i j) after (left_to_right) or before p
  Perm apply(const Perm& p, int i, int j) const {
    Perm q = p;
    if (order == Composition::left_to_right) {
      // x -> t(p(x))
      for (int x = 0; x < d; ++x) {
        if (q[x] == i) {
          q[x] = static_cast<std::int8_t>(j);
        } else if (q[x] == j) {
          q[x] = static_cast<std::int8_t>(i);
        }
      }
    } else {
      // x -> p(t(x))
      std::swap(q[i], q[j]);
    }
    return q;
  }

  static int merge(Perm& labels, int d, int i, int j, int components) {
    const int li = labels[i];
    const int lj = labels[j];
    if (li == lj) return components;
    for (int x = 0; x < d; ++x) {
      if (labels[x] == lj) labels[x] = static_cast<std::int8_t>(li);
    }
    return components - 1;
  }

  void descend(int depth, const Perm& product, const Perm& labels, int components) {
    if (depth == m - 1) {
      // the last factor is forced: it must carry product to target
      for (const auto& [i, j] : transpositions) {
        if (apply(product, i, j) != target) continue;
        Perm l = labels;
        if (merge(l, d, i, j, components) == 1) ++count;
      }
      return;
    }
    for (const auto& [i, j] : transpositions) {
      Perm l = labels;
      const int c = merge(l, d, i, j, components);
      // each remaining factor joins at most two components
      if (c - 1 > m - depth - 1) continue;
      descend(depth + 1, apply(product, i, j), l, c);
    }
  }
};

}  // namespace

double hurwitz_enumeration_bound(const HurwitzInstance& inst) {
  const int d = inst.degree();
  return std::pow(static_cast<double>(d * (d - 1) / 2), inst.m);
}

std::uint64_t hurwitz_brute(const HurwitzInstance& inst, Composition order) {
  validate_instance(inst);
  return hurwitz_brute(inst, canonical_permutation(inst.mu), order);
}

std::uint64_t hurwitz_brute(const HurwitzInstance& inst, const Permutation& target, Composition order) {
  validate_instance(inst);
  const int d = inst.degree();
  if (static_cast<int>(target.size()) != d || cycle_type(target) != inst.mu) {
    throw std::invalid_argument("target permutation does not have cycle type mu");
  }
  // sign of the target is (-1)^{d-l}; a product of m transpositions has sign (-1)^m
  if ((d - inst.length() - inst.m) % 2 != 0) return 0;

  Enumerator e{d, inst.m, order, {}, {}};
  for (int x = 0; x < d; ++x) e.target[x] = static_cast<std::int8_t>(target[x]);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) e.transpositions.emplace_back(i, j);
  }
  e.run();
  return e.count;
}

int riemann_hurwitz_m(int g, const std::vector<int>& mu) {
  return 2 * g - 2 + static_cast<int>(mu.size()) + std::accumulate(mu.begin(), mu.end(), 0);
}

Rational elsv_value(int g, const std::vector<int>& mu, HodgeEngine& engine) {
  const int l = static_cast<int>(mu.size());
  if (!is_stable(g, l)) {
    throw std::domain_error("ELSV formula needs a stable (g, l); got (" + std::to_string(g) + "," +
                            std::to_string(l) + ")");
  }
  const int m = riemann_hurwitz_m(g, mu);
  const int dim = moduli_dimension(g, l);

  Rational prefactor = factorial(m);
  for (int part : mu) prefactor *= power(Rational(part), part + 1) / factorial(part);

  Rational integral = 0;
  for (int j = 0; j <= g && j <= dim; ++j) {
    std::vector<int> lambda;
    if (j > 0) {
      lambda.assign(static_cast<std::size_t>(j), 0);
      lambda.back() = 1;
    }
    const Rational sign = j % 2 == 0 ? 1 : -1;
    // all psi exponent vectors of total degree dim - j
    std::vector<int> k(static_cast<std::size_t>(l), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
      if (i == l - 1) {
        k[i] = remaining;
        Rational weight = 1;
        for (int t = 0; t < l; ++t) weight *= power(Rational(mu[t]), k[t]);
        integral += sign * weight * engine.integral(HodgeMonomial{g, lambda, k});
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        k[i] = e;
        self(self, i + 1, remaining - e);
      }
    };
    rec(rec, 0, dim - j);
  }
  return prefactor * integral;
}

std::vector<std::vector<int>> partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (d >= 1) rec(rec, d, d);
  return out;
}

}  // namespace pshodge
