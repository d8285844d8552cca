#include "oracles.hpp"
#include "pshodge/hurwitz.hpp"
#include "pshodge/moduli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pshodge;

TEST(Hurwitz, BruteExamples) {
  EXPECT_EQ(hurwitz_brute({{2}, 1}), 1u);
  EXPECT_EQ(hurwitz_brute({{2}, 3}), 1u);
  EXPECT_EQ(hurwitz_brute({{1, 1, 1}, 4}), 24u);
}

TEST(Hurwitz, RiemannHurwitz) {
  EXPECT_EQ(riemann_hurwitz_m(0, {1, 1, 1}), 4);
  EXPECT_EQ(riemann_hurwitz_m(1, {2}), 3);
  EXPECT_EQ(riemann_hurwitz_m(0, {2}), 1);
}

TEST(Hurwitz, ElsvExamples) {
  WkEngine wk;
  HodgeEngine hodge(wk);
  EXPECT_EQ(elsv_value(1, {2}, hodge), 1);
  EXPECT_EQ(elsv_value(0, {1, 1, 1}, hodge), 24);
  EXPECT_THROW(elsv_value(0, {2, 1}, hodge), std::domain_error);
}

TEST(Hurwitz, MatchesPlainEnumeration) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : partitions(d)) {
      for (int m = 0; m <= 6; ++m) {
        EXPECT_EQ(hurwitz_brute({mu, m}), oracle::naive_hurwitz(canonical_permutation(mu), m)) << "d=" << d << " m=" << m;
      }
    }
  }
}

TEST(Hurwitz, DenesCycleCount) {
  // a d-cycle has d^{d-2} minimal factorizations into transpositions
  for (int d = 2; d <= 6; ++d) {
    std::uint64_t expected = 1;
    for (int k = 0; k < d - 2; ++k) expected *= static_cast<std::uint64_t>(d);
    EXPECT_EQ(hurwitz_brute({{d}, d - 1}), expected);
  }
}

TEST(Hurwitz, ParityVanishing) {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& mu : partitions(d)) {
      const int parity = (d - static_cast<int>(mu.size())) % 2;
      for (int m = 1 - parity; m <= 6; m += 2) EXPECT_EQ(hurwitz_brute({mu, m}), 0u);
    }
  }
}

TEST(Hurwitz, ConjugateTargetAndOppositeOrder) {
  std::mt19937_64 rng(31);
  for (int d = 2; d <= 5; ++d) {
    for (const auto& mu : partitions(d)) {
      for (int m = 0; m <= 6; ++m) {
        const HurwitzInstance inst{mu, m};
        const std::uint64_t base = hurwitz_brute(inst);
        EXPECT_EQ(hurwitz_brute(inst, Composition::right_to_left), base);
        Permutation sigma(static_cast<std::size_t>(d));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const Permutation target = canonical_permutation(mu);
        Permutation conj(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x) conj[sigma[x]] = sigma[target[x]];
        EXPECT_EQ(hurwitz_brute(inst, conj), base);
      }
    }
  }
}

TEST(Hurwitz, RejectsBadInput) {
  EXPECT_THROW(hurwitz_brute({{7}, 2}), ResourceLimitError);
  EXPECT_THROW(hurwitz_brute({{2}, 9}), ResourceLimitError);
  EXPECT_THROW(hurwitz_brute({{1, 2}, 1}), std::invalid_argument);
  EXPECT_THROW(hurwitz_brute({{2, 1}, 1}, Permutation{0, 1, 2}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(hurwitz_enumeration_bound({{2, 1}, 3}), 27.0);
}

TEST(Hurwitz, ElsvAgreement) {
  WkEngine wk;
  HodgeEngine hodge(wk);
  int checked = 0;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : partitions(d)) {
      for (int g = 0; riemann_hurwitz_m(g, mu) <= 7; ++g) {
        if (!is_stable(g, static_cast<int>(mu.size()))) continue;
        EXPECT_EQ(Rational(hurwitz_brute({mu, riemann_hurwitz_m(g, mu)})), elsv_value(g, mu, hodge));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(Hurwitz, Partitions) {
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(6).size(), 11u);
  EXPECT_EQ(partitions(3), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}}));
}
