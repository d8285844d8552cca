#pragma once

// Internal helpers for enumerating splittings of sorted multisets.

#include "pshodge/rational.hpp"

#include <utility>
#include <vector>

namespace pshodge::detail {

/// (value, multiplicity) runs of a sorted vector.
inline std::vector<std::pair<int, int>> runs(const std::vector<int>& sorted) {
  std::vector<std::pair<int, int>> out;
  for (int v : sorted) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

/// Calls f(chosen, rest, weight) for every sub-multiset of the sorted input,
/// where weight counts how many index subsets realize that split.
template <class F>
void for_each_split(const std::vector<int>& sorted, F&& f) {
  const auto groups = runs(sorted);
  std::vector<int> chosen;
  std::vector<int> rest;
  auto rec = [&](auto&& self, std::size_t gi, Rational weight) -> void {
    if (gi == groups.size()) {
      f(chosen, rest, weight);
      return;
    }
    const auto [value, count] = groups[gi];
    for (int c = 0; c <= count; ++c) {
      chosen.insert(chosen.end(), c, value);
      rest.insert(rest.end(), count - c, value);
      self(self, gi + 1, weight * binomial(count, c));
      chosen.resize(chosen.size() - c);
      rest.resize(rest.size() - (count - c));
    }
  };
  rec(rec, 0, Rational(1));
}

inline std::vector<int> with_inserted(std::vector<int> v, int x) {
  auto it = v.begin();
  while (it != v.end() && *it < x) ++it;
  v.insert(it, x);
  return v;
}

inline int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace pshodge::detail
