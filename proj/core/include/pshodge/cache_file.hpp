#pragma once

#include "pshodge/rational.hpp"
#include "pshodge/wk.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pshodge {

/// Persisted table of pure-psi intersection numbers.
///
/// Text format: the first line is exactly "PSHODGE-WKCACHE v1"; every further
/// line is  g TAB n TAB e1,e2,...,en TAB numerator TAB denominator  with the
/// exponents sorted ascending and the fraction in lowest terms with a
/// positive denominator. Keys are unique.
inline constexpr const char* kCacheHeader = "PSHODGE-WKCACHE v1";

using CacheEntries = std::vector<std::pair<WKKey, Rational>>;

class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(const std::string& what, std::size_t line);
  /// 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Writes entries sorted by (g, n, exponents).
void cache_store(const std::filesystem::path& path, CacheEntries entries);
void cache_store(const std::filesystem::path& path, const WkEngine& engine);

/// A missing file yields no entries. A wrong header or malformed line throws
/// CacheFormatError.
CacheEntries cache_load(const std::filesystem::path& path);

CacheEntries parse_cache(const std::string& text);
std::string format_cache(CacheEntries entries);

struct CacheVerification {
  std::size_t checked = 0;
  std::vector<WKKey> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};

/// Recomputes a deterministic sample of `sample` entries (all of them when
/// sample is 0 or exceeds the size) with a fresh engine.
CacheVerification cache_verify(const CacheEntries& entries, std::size_t sample, std::uint64_t seed = 0x5eed);

/// Verifies a sample and, only if every sampled value matches, seeds the engine.
/// Returns the verification report; on failure nothing is seeded.
CacheVerification cache_seed_verified(WkEngine& engine, const CacheEntries& entries, std::size_t sample);

}  // namespace pshodge
