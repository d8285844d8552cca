#include "pshodge_cli/cli.hpp"

#include "pshodge/cache_file.hpp"
#include "pshodge/expr.hpp"
#include "pshodge/hodge.hpp"
#include "pshodge/moduli.hpp"
#include "pshodge/selfcheck.hpp"
#include "pshodge/taut.hpp"
#include "pshodge/wk.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <thread>

namespace pshodge::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kVerifySample = 32;

struct EvalOptions {
  int g = -1;
  int n = -1;
  std::string space = "stable";
  std::string expr;
  bool json = false;
  std::string cache;
  std::string batch;
  int jobs = 1;
};

struct SeriesOptions {
  int n = 1;
  int g_max = 5;
  std::string cache;
};

struct SelfcheckCmdOptions {
  std::uint64_t seed = SelfcheckOptions{}.seed;
  bool flip_excess = false;
};

struct CacheOptions {
  std::string path;
  int g_max = 3;
  int n_max = 4;
  std::size_t sample = kVerifySample;
  std::uint64_t seed = 0x5eed;
};

Space parse_space(const std::string& s) { return s == "ps" ? Space::pseudostable : Space::stable; }

// Loads a cache file into the shared engine after spot-checking it.
bool attach_cache(const std::string& path, std::ostream& err) {
  if (path.empty()) return true;
  const CacheEntries entries = cache_load(path);
  if (entries.empty()) return true;
  const CacheVerification v = cache_seed_verified(WkEngine::shared(), entries, kVerifySample);
  if (!v.ok()) {
    err << "error: cache " << path << " failed verification (" << v.mismatches.size() << " of " << v.checked
        << " sampled values wrong); refusing to use it\n";
    return false;
  }
  return true;
}

void persist_cache(const std::string& path) {
  if (!path.empty()) cache_store(path, WkEngine::shared());
}

Rational evaluate(int g, int n, Space space, const std::string& text) {
  require_nonempty(g, n, space);
  const TautExpr f = parse_expression(text, g, n);
  return space == Space::pseudostable ? ps_hodge_integral(g, n, f) : stable_hodge_integral(g, n, f);
}

json result_json(const EvalOptions& o, const std::string& expr) {
  return json{{"g", o.g}, {"n", o.n}, {"space", o.space}, {"expr", expr}};
}

int cmd_eval_single(const EvalOptions& o, std::ostream& out) {
  const Rational value = evaluate(o.g, o.n, parse_space(o.space), o.expr);
  if (o.json) {
    json j = result_json(o, o.expr);
    j["value"] = to_string(value);
    out << j.dump() << '\n';
  } else {
    out << to_string(value) << '\n';
  }
  return kOk;
}

struct BatchLine {
  std::size_t number = 0;
  std::string text;
  std::string value;
  std::string error;
};

int cmd_eval_batch(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.batch);
  if (!in) {
    err << "error: cannot read batch file " << o.batch << '\n';
    return kUserError;
  }
  std::vector<BatchLine> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    lines.push_back({number, text, {}, {}});
  }

  const Space space = parse_space(o.space);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      try {
        lines[i].value = to_string(evaluate(o.g, o.n, space, lines[i].text));
      } catch (const std::exception& e) {
        lines[i].error = e.what();
      }
    }
  };
  const int jobs = std::clamp(o.jobs, 1, 64);
  std::vector<std::jthread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  bool failed = false;
  for (const BatchLine& line : lines) {
    failed = failed || !line.error.empty();
    if (o.json) {
      json j = result_json(o, line.text);
      j["line"] = line.number;
      if (line.error.empty()) {
        j["value"] = line.value;
      } else {
        j["error"] = line.error;
      }
      out << j.dump() << '\n';
    } else if (line.error.empty()) {
      out << line.number << '\t' << line.value << '\n';
    } else {
      out << line.number << "\terror: " << line.error << '\n';
    }
  }
  return failed ? kUserError : kOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  if (o.batch.empty() && o.expr.empty()) {
    err << "error: eval needs an expression or --batch FILE\n";
    return kUserError;
  }
  if (!attach_cache(o.cache, err)) return kUserError;
  const int status = o.batch.empty() ? cmd_eval_single(o, out) : cmd_eval_batch(o, out, err);
  persist_cache(o.cache);
  return status;
}

int cmd_series(const SeriesOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1 || o.g_max > 6) {
    err << "error: series needs n >= 1 and g-max <= 6\n";
    return kUserError;
  }
  if (!attach_cache(o.cache, err)) return kUserError;
  out << "g\tps integral\tseries coefficient\tcheck\n";
  for (int g = 2; g <= o.g_max; ++g) {
    const std::string text = "(2*lambda2 - lambda1^2)*psi1^" + std::to_string(3 * g - 5 + o.n);
    const Rational value = ps_hodge_integral(g, o.n, parse_expression(text));
    const Rational expected = Rational(-1) / (power(Rational(24), g) * factorial(g - 1));
    out << g << '\t' << to_string(value) << '\t' << to_string(expected) << '\t'
        << (value == expected ? "PASS" : "FAIL") << '\n';
  }
  persist_cache(o.cache);
  return kOk;
}

int cmd_selfcheck(const SelfcheckCmdOptions& o, std::ostream& out) {
  SelfcheckOptions options;
  options.seed = o.seed;
  options.excess = o.flip_excess ? ExcessSign::positive : ExcessSign::negative;
  bool ok = true;
  for (const SuiteResult& r : run_selfcheck(options, HodgeEngine::shared())) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ')';
    out << '\n';
  }
  out << (ok ? "all suites passed" : "some suites FAILED") << '\n';
  return ok ? kOk : kSelfcheckFailed;
}

// Fills the engine with every psi integral on Mbar_{g,n} for g <= g_max, n <= n_max.
void warm(int g_max, int n_max) {
  WkEngine& wk = WkEngine::shared();
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 1; n <= n_max; ++n) {
      if (!is_stable(g, n)) continue;
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      std::function<void(int, int, int)> rec = [&](int i, int remaining, int lo) {
        if (i == n - 1) {
          if (remaining < lo) return;
          d[i] = remaining;
          wk.integral(g, d);
          return;
        }
        for (int v = lo; v * (n - i) <= remaining; ++v) {
          d[i] = v;
          rec(i + 1, remaining - v, v);
        }
      };
      rec(0, moduli_dimension(g, n), 0);
    }
  }
}

int cmd_cache_store(const CacheOptions& o, std::ostream& out, std::ostream& err) {
  if (!attach_cache(o.path, err)) return kUserError;
  warm(o.g_max, o.n_max);
  cache_store(o.path, WkEngine::shared());
  out << "stored " << WkEngine::shared().cache_size() << " entries in " << o.path << '\n';
  return kOk;
}

int cmd_cache_load(const CacheOptions& o, std::ostream& out) {
  const CacheEntries entries = cache_load(o.path);
  out << "loaded " << entries.size() << " entries from " << o.path << '\n';
  return kOk;
}

int cmd_cache_verify(const CacheOptions& o, std::ostream& out) {
  const CacheEntries entries = cache_load(o.path);
  const CacheVerification v = cache_verify(entries, o.sample, o.seed);
  out << "checked " << v.checked << " of " << entries.size() << " entries, " << v.mismatches.size()
      << " mismatches\n";
  for (const WKKey& key : v.mismatches) {
    out << "  mismatch at g=" << key.g << " d=";
    for (std::size_t i = 0; i < key.d.size(); ++i) out << (i ? "," : "") << key.d[i];
    out << '\n';
  }
  return v.ok() ? kOk : kUserError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge integrals on stable and pseudostable moduli spaces", "pshodge"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Integrate a polynomial in lambda and psi classes");
  eval_cmd->add_option("--g", eval.g, "Genus")->required()->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--n", eval.n, "Number of markings")->required()->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--space", eval.space, "stable or ps")->check(CLI::IsMember({"stable", "ps"}));
  eval_cmd->add_flag("--json", eval.json, "Print a JSON object");
  eval_cmd->add_option("--cache", eval.cache, "Psi-integral cache file to load and update");
  eval_cmd->add_option("--batch", eval.batch, "File with one expression per line");
  eval_cmd->add_option("--jobs", eval.jobs, "Worker threads for --batch")->check(CLI::PositiveNumber);
  eval_cmd->add_option("expr", eval.expr, "Expression such as \"lambda1*psi1^3\"");

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Tabulate (2 lambda2 - lambda1^2) psi1^{3g-5+n} on the ps space");
  series_cmd->add_option("--n", series.n, "Number of markings");
  series_cmd->add_option("--g-max", series.g_max, "Largest genus (at most 6)");
  series_cmd->add_option("--cache", series.cache, "Psi-integral cache file");

  SelfcheckCmdOptions selfcheck;
  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the built-in consistency suites");
  selfcheck_cmd->add_option("--seed", selfcheck.seed, "Seed for the randomized suites");
  selfcheck_cmd->add_flag("--flip-excess-sign", selfcheck.flip_excess,
                          "Use +psi_star+psi_bullet for the excess class (should fail)");

  CacheOptions cache;
  auto* cache_cmd = app.add_subcommand("cache", "Manage the psi-integral cache file");
  cache_cmd->require_subcommand(1);
  auto* store_cmd = cache_cmd->add_subcommand("store", "Compute psi integrals and write them");
  store_cmd->add_option("path", cache.path)->required();
  store_cmd->add_option("--g-max", cache.g_max, "Largest genus to precompute");
  store_cmd->add_option("--n-max", cache.n_max, "Largest number of markings to precompute");
  auto* load_cmd = cache_cmd->add_subcommand("load", "Parse a cache file and report its size");
  load_cmd->add_option("path", cache.path)->required();
  auto* verify_cmd = cache_cmd->add_subcommand("verify", "Recompute a sample of cached values");
  verify_cmd->add_option("path", cache.path)->required();
  verify_cmd->add_option("--sample", cache.sample, "Entries to recompute (0 = all)");
  verify_cmd->add_option("--seed", cache.seed, "Sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out, err);
    if (*series_cmd) return cmd_series(series, out, err);
    if (*selfcheck_cmd) return cmd_selfcheck(selfcheck, out);
    if (*store_cmd) return cmd_cache_store(cache, out, err);
    if (*load_cmd) return cmd_cache_load(cache, out);
    if (*verify_cmd) return cmd_cache_verify(cache, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  return kUserError;
}

}  // namespace pshodge::cli
