#include "pshodge/cache_file.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace pshodge;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pshodge_cache_test_" + name);
}

std::string header() { return std::string(kCacheHeader) + "\n"; }

std::size_t failing_line(const std::string& text) {
  try {
    parse_cache(text);
  } catch (const CacheFormatError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(Cache, OnePointedLine) {
  const CacheEntries entries = parse_cache(header() + "1\t1\t1\t1\t24\n");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].first, (WKKey{1, {1}}));
  EXPECT_EQ(entries[0].second, Rational(1, 24));
  EXPECT_EQ(format_cache(entries), header() + "1\t1\t1\t1\t24\n");
}

TEST(Cache, StoreLoadRoundTrip) {
  WkEngine wk;
  wk.integral(3, {1, 2, 3, 4});
  wk.integral(2, {0, 0, 6});
  const auto path = temp_path("roundtrip");
  cache_store(path, wk);
  const CacheEntries loaded = cache_load(path);
  EXPECT_EQ(loaded, wk.snapshot());
  WkEngine seeded;
  seeded.seed(loaded);
  for (const auto& [key, value] : loaded) EXPECT_EQ(seeded.integral(key), value);
  EXPECT_EQ(format_cache(loaded), format_cache(parse_cache(format_cache(loaded))));
  std::filesystem::remove(path);
}

TEST(Cache, MissingFileIsEmpty) {
  EXPECT_TRUE(cache_load(temp_path("does_not_exist")).empty());
}

TEST(Cache, HeaderRefused) {
  EXPECT_EQ(failing_line("PSHODGE-WKCACHE v2\n"), 1u);
  EXPECT_EQ(failing_line("garbage\n1\t1\t1\t1\t24\n"), 1u);
  EXPECT_EQ(failing_line(""), 1u);
}

TEST(Cache, MalformedLinesReportLineNumbers) {
  const std::string ok = "1\t1\t1\t1\t24\n";
  EXPECT_EQ(failing_line(header() + ok + "1\t1\t1\t1\n"), 3u);           // field count
  EXPECT_EQ(failing_line(header() + ok + "0\t4\t0,0,1\t1\t1\n"), 3u);     // n mismatch
  EXPECT_EQ(failing_line(header() + "0\t3\t1,0,0\t1\t1\n"), 2u);          // unsorted
  EXPECT_EQ(failing_line(header() + "1\t1\t1\t1\t-24\n"), 2u);            // denominator sign
  EXPECT_EQ(failing_line(header() + "1\t1\t1\t2\t48\n"), 2u);             // not lowest terms
  EXPECT_EQ(failing_line(header() + ok + ok), 3u);                        // duplicate
  EXPECT_EQ(failing_line(header() + "1\t1\tx\t1\t24\n"), 2u);             // not a number
}

TEST(Cache, VerifyDetectsTampering) {
  WkEngine wk;
  wk.integral(2, {1, 2, 2, 2});
  CacheEntries entries = wk.snapshot();
  ASSERT_GT(entries.size(), 2u);
  EXPECT_TRUE(cache_verify(entries, 0).ok());
  entries.back().second += 1;
  const CacheVerification v = cache_verify(entries, 0);
  EXPECT_FALSE(v.ok());
  EXPECT_EQ(v.mismatches.size(), 1u);
  EXPECT_EQ(v.checked, entries.size());

  WkEngine target;
  EXPECT_FALSE(cache_seed_verified(target, entries, 0).ok());
  EXPECT_EQ(target.cache_size(), 0u);
}

TEST(Cache, SampleIsDeterministic) {
  WkEngine wk;
  wk.integral(3, {2, 2, 3, 3});
  const CacheEntries entries = wk.snapshot();
  const auto a = cache_verify(entries, 5, 99);
  const auto b = cache_verify(entries, 5, 99);
  EXPECT_EQ(a.checked, 5u);
  EXPECT_EQ(a.checked, b.checked);
}
