#include "oracles.hpp"
#include "pshodge/moduli.hpp"
#include "pshodge/wk.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

using namespace pshodge;

namespace {

// every sorted exponent vector of length n and total degree `total`
std::vector<std::vector<int>> sorted_vectors(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int i, int remaining, int lo) {
    if (i == n) {
      if (remaining == 0) out.push_back(d);
      return;
    }
    for (int v = lo; v * (n - i) <= remaining; ++v) {
      d[i] = v;
      rec(i + 1, remaining - v, v);
    }
  };
  rec(0, total, 0);
  return out;
}

}  // namespace

TEST(Wk, Examples) {
  WkEngine wk;
  EXPECT_EQ(wk.integral(0, {0, 0, 0}), 1);
  EXPECT_EQ(wk.integral(1, {1}), Rational(1, 24));
  EXPECT_EQ(wk.integral(2, {4}), Rational(1, 1152));
  EXPECT_EQ(wk.integral(1, {0, 0}), 0);
  EXPECT_EQ(wk.integral(0, {1, 0, 0, 0}), 1);
}

TEST(Wk, KnownGenusOneTwo) {
  WkEngine wk;
  EXPECT_EQ(wk.integral(1, {1, 1}), Rational(1, 24));
  EXPECT_EQ(wk.integral(2, {2, 3}), Rational(29, 5760));
  EXPECT_EQ(wk.integral(2, {2, 2, 2}), Rational(7, 240));
  EXPECT_EQ(wk.integral(3, {7}), Rational(1, 82944));
}

TEST(Wk, UnstableAndDegreeMismatchAreZero) {
  WkEngine wk;
  EXPECT_EQ(wk.integral(0, {}), 0);
  EXPECT_EQ(wk.integral(0, {0, 0}), 0);
  EXPECT_EQ(wk.integral(1, {}), 0);
  EXPECT_EQ(wk.integral(2, {3}), 0);
  EXPECT_EQ(wk.integral(1, {-1, 2}), 0);
}

TEST(Wk, OnePointed) {
  WkEngine wk;
  Rational expected = 1;
  for (int g = 1; g <= 6; ++g) {
    expected /= 24 * g;
    EXPECT_EQ(wk.integral(g, {3 * g - 2}), expected) << "g=" << g;
  }
}

TEST(Wk, GenusZeroClosedForm) {
  WkEngine wk;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : sorted_vectors(n, n - 3)) EXPECT_EQ(wk.integral(0, d), oracle::genus_zero(d));
  }
}

TEST(Wk, StringEquation) {
  WkEngine wk;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 1; 3 * g - 3 + n <= 12 && n <= 7; ++n) {
      if (!is_stable(g, n - 1)) continue;
      for (auto d : sorted_vectors(n - 1, 3 * g - 3 + n)) {
        Rational rhs = 0;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (d[j] == 0) continue;
          auto lowered = d;
          --lowered[j];
          rhs += wk.integral(g, lowered);
        }
        d.insert(d.begin(), 0);
        EXPECT_EQ(wk.integral(g, d), rhs);
      }
    }
  }
}

TEST(Wk, DilatonEquation) {
  WkEngine wk;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 1; 3 * g - 3 + n <= 10 && n <= 6; ++n) {
      if (!is_stable(g, n)) continue;
      for (auto d : sorted_vectors(n, 3 * g - 3 + n)) {
        const Rational base = wk.integral(g, d);
        d.push_back(1);
        EXPECT_EQ(wk.integral(g, d), Rational(2 * g - 2 + n) * base);
      }
    }
  }
}

TEST(Wk, SymmetricInExponents) {
  WkEngine wk;
  std::mt19937_64 rng(7);
  for (auto d : sorted_vectors(4, 8)) {
    const Rational sorted = wk.integral(2, d);
    std::shuffle(d.begin(), d.end(), rng);
    EXPECT_EQ(wk.integral(WKKey{2, d}), sorted);
    EXPECT_EQ(wk.integral(2, d), sorted);
  }
}

TEST(Wk, KappaExamples) {
  WkEngine wk;
  EXPECT_EQ(wk.kappa_psi_integral({1, {0}, {1}}), Rational(1, 24));
  EXPECT_EQ(wk.kappa_psi_integral({0, {0, 0, 0, 0}, {1}}), 1);
  EXPECT_EQ(wk.kappa_psi_integral({2, {4}, {}}), Rational(1, 1152));
  EXPECT_EQ(wk.kappa_psi_integral({0, {0, 0, 0, 0, 0}, {1, 1}}), 5);
}

TEST(Wk, KappaOrderIndependence) {
  WkEngine wk;
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 60) {
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const int n = std::uniform_int_distribution<int>(g == 0 ? 3 : 1, 4)(rng);
    const int dim = moduli_dimension(g, n);
    if (dim > 8 || dim < 2) continue;
    std::vector<int> kappa;
    int used = 0;
    while (used < dim && kappa.size() < 4) {
      kappa.push_back(std::uniform_int_distribution<int>(1, dim - used)(rng));
      used += kappa.back();
    }
    std::vector<int> psi(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < dim - used; ++k) ++psi[std::uniform_int_distribution<int>(0, n - 1)(rng)];
    std::sort(kappa.begin(), kappa.end());
    const Rational reference = wk.kappa_psi_integral({g, psi, kappa});
    do {
      EXPECT_EQ(wk.kappa_psi_integral_in_order({g, psi, kappa}), reference);
    } while (std::next_permutation(kappa.begin(), kappa.end()));
    ++checked;
  }
}

TEST(Wk, SnapshotSeedRoundTrip) {
  WkEngine a;
  a.integral(3, {2, 3, 4});
  const auto snap = a.snapshot();
  ASSERT_FALSE(snap.empty());
  WkEngine b;
  b.seed(snap);
  EXPECT_EQ(b.cache_size(), a.cache_size());
  for (const auto& [key, value] : snap) EXPECT_EQ(b.integral(key), value);
  b.clear();
  EXPECT_EQ(b.cache_size(), 0u);
}

TEST(Wk, ConcurrentLookupsAgree) {
  WkEngine shared_engine;
  const auto keys = sorted_vectors(3, 9);
  std::vector<std::vector<Rational>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& d : keys) results[t].push_back(shared_engine.integral(3, d));
    });
  }
  for (auto& th : threads) th.join();
  WkEngine reference;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Rational expected = reference.integral(3, keys[i]);
    for (int t = 0; t < 4; ++t) EXPECT_EQ(results[t][i], expected);
  }
}
