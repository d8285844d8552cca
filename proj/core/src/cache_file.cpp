#include "pshodge/cache_file.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace pshodge {

CacheFormatError::CacheFormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "cache line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

void sort_entries(CacheEntries& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.g != b.first.g) return a.first.g < b.first.g;
    if (a.first.n() != b.first.n()) return a.first.n() < b.first.n();
    return a.first.d < b.first.d;
  });
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(s);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_small(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw CacheFormatError(std::string("bad ") + what + " '" + s + "'", line);
  }
  return std::stoi(s);
}

Integer parse_integer(const std::string& s, std::size_t line, const char* what) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
    throw CacheFormatError(std::string("bad ") + what + " '" + s + "'", line);
  }
  return Integer(s);
}

}  // namespace

std::string format_cache(CacheEntries entries) {
  sort_entries(entries);
  std::ostringstream os;
  os << kCacheHeader << '\n';
  for (const auto& [key, value] : entries) {
    os << key.g << '\t' << key.n() << '\t';
    for (std::size_t i = 0; i < key.d.size(); ++i) os << (i ? "," : "") << key.d[i];
    os << '\t' << boost::multiprecision::numerator(value).str() << '\t'
       << boost::multiprecision::denominator(value).str() << '\n';
  }
  return os.str();
}

CacheEntries parse_cache(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCacheHeader) {
    throw CacheFormatError("missing or unsupported header (expected '" + std::string(kCacheHeader) + "')", 1);
  }
  CacheEntries entries;
  std::set<WKKey> seen;
  std::size_t number = 1;
  while (std::getline(is, line)) {
    ++number;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 5) throw CacheFormatError("expected 5 tab-separated fields", number);
    WKKey key;
    key.g = parse_small(fields[0], number, "genus");
    const int n = parse_small(fields[1], number, "marking count");
    if (!fields[2].empty()) {
      for (const auto& e : split(fields[2], ',')) key.d.push_back(parse_small(e, number, "exponent"));
    }
    if (key.n() != n) throw CacheFormatError("exponent count does not match n", number);
    if (!std::is_sorted(key.d.begin(), key.d.end())) throw CacheFormatError("exponents are not sorted", number);
    const Integer num = parse_integer(fields[3], number, "numerator");
    const Integer den = parse_integer(fields[4], number, "denominator");
    if (den <= 0) throw CacheFormatError("denominator must be positive", number);
    if (boost::multiprecision::gcd(num, den) != 1) throw CacheFormatError("fraction is not in lowest terms", number);
    if (!seen.insert(key).second) throw CacheFormatError("duplicate key", number);
    entries.emplace_back(std::move(key), Rational(num, den));
  }
  return entries;
}

void cache_store(const std::filesystem::path& path, CacheEntries entries) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << format_cache(std::move(entries));
  if (!out) throw std::runtime_error("failed writing cache file " + path.string());
}

void cache_store(const std::filesystem::path& path, const WkEngine& engine) { cache_store(path, engine.snapshot()); }

CacheEntries cache_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str());
}

CacheVerification cache_verify(const CacheEntries& entries, std::size_t sample, std::uint64_t seed) {
  std::vector<std::size_t> indices(entries.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  if (sample != 0 && sample < entries.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(sample);
  }
  WkEngine fresh;
  CacheVerification report;
  for (std::size_t i : indices) {
    ++report.checked;
    const auto& [key, value] = entries[i];
    if (fresh.integral(key) != value) report.mismatches.push_back(key);
  }
  return report;
}

CacheVerification cache_seed_verified(WkEngine& engine, const CacheEntries& entries, std::size_t sample) {
  CacheVerification report = cache_verify(entries, sample);
  if (report.ok()) engine.seed(entries);
  return report;
}

}  // namespace pshodge
