#include "gqca/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include <gqca/basis.hpp>
#include <gqca/cache.hpp>
#include <gqca/errors.hpp>
#include <gqca/expression.hpp>
#include <gqca/json_io.hpp>
#include <gqca/kronecker.hpp>
#include <gqca/seed.hpp>

namespace gqca::cli {
namespace {

struct Range {
  long long lo = 0;
  long long hi = -1;
  bool empty() const { return hi < lo; }
};

// "a..b" or a single integer.
std::optional<Range> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return Range{v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    Range r;
    r.lo = std::stoll(a, &used);
    if (used != a.size()) return std::nullopt;
    r.hi = std::stoll(b, &used);
    if (used != b.size()) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Range range_or(const std::string& text, Range fallback, const char* name) {
  if (text.empty()) return fallback;
  const auto r = parse_range(text);
  if (!r) throw UsageError(std::string("bad range for --") + name + ": " + text);
  return *r;
}

struct Options {
  std::string format = "text";
  int max_k = kDefaultMaxK;
  std::string cache;
  bool no_cache = false;

  long long k = 0;
  std::string expr;

  std::string formula;
  std::string m_range;
  std::string n_range;
  std::string k_range;
  int window = -1;
  int jobs = 1;

  std::string seed_file;
  int dir = 1;
  int eps = 1;
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_element(const Options& o, const TorusElement& x, std::ostream& out) {
  if (json_output(o)) {
    out << to_json(x).dump() << '\n';
  } else {
    out << x.to_string() << '\n';
  }
}

std::string params_text(const VerificationReport& r) {
  std::string s;
  for (const auto& [name, value] : r.params) {
    s += ' ' + name + '=' + std::to_string(value);
  }
  return s;
}

std::string report_line(const Options& o, const VerificationReport& r) {
  if (json_output(o)) return to_json(r).dump();
  std::string line = (r.ok ? "ok   " : "FAIL ") + r.formula + params_text(r);
  if (!r.error.empty()) {
    line += "  error: " + r.error;
  } else if (!r.ok) {
    line += "  diff: " + r.diff.to_string();
  }
  return line;
}

using Case = std::function<VerificationReport()>;

std::vector<Case> verify_cases(const Options& o, const KroneckerAlgebra& alg,
                               const Basis& basis) {
  std::vector<Case> cases;
  const auto grid = [&](Range ms, Range ns, auto make) {
    for (long long m = ms.lo; m <= ms.hi; ++m) {
      for (long long n = ns.lo; n <= ns.hi; ++n) {
        if (auto c = make(static_cast<int>(m), static_cast<int>(n))) {
          cases.push_back(std::move(*c));
        }
      }
    }
  };
  const auto cheb_grid = [&](auto fn) {
    grid(range_or(o.m_range, {1, 10}, "m"), range_or(o.n_range, {1, 10}, "n"),
         [&](int m, int n) -> std::optional<Case> {
           if (n < 1 || n > m) return std::nullopt;
           return Case([&alg, fn, m, n] { return fn(alg, m, n); });
         });
  };
  const auto var_cheb_grid = [&](auto fn) {
    grid(range_or(o.m_range, {-4, 8}, "m"), range_or(o.n_range, {1, 8}, "n"),
         [&](int m, int n) -> std::optional<Case> {
           if (n < 1) return std::nullopt;
           return Case([&alg, fn, m, n] { return fn(alg, m, n); });
         });
  };
  const auto var_var_grid = [&](auto fn) {
    grid(range_or(o.m_range, {-4, 4}, "m"), range_or(o.n_range, {2, 10}, "n"),
         [&](int m, int n) -> std::optional<Case> {
           if (n < 2) return std::nullopt;
           return Case([&alg, fn, m, n] { return fn(alg, m, n); });
         });
  };
  const auto single = [&](const std::string& text, Range fallback,
                          const char* name, auto fn) {
    const Range r = range_or(text, fallback, name);
    for (long long v = r.lo; v <= r.hi; ++v) {
      const int i = static_cast<int>(v);
      cases.push_back([&alg, fn, i] { return fn(alg, i); });
    }
  };
  const auto bar_of = [](FormulaId id) {
    return [id](const KroneckerAlgebra& a, int m, int n) {
      return verify_bar_images(a, id, m, n);
    };
  };

  const std::string& f = o.formula;
  if (f == "thm1") {
    cheb_grid(verify_cheb_cheb);
  } else if (f == "thm2") {
    var_cheb_grid(verify_var_cheb);
  } else if (f == "thm3") {
    var_var_grid(verify_var_var);
  } else if (f == "bar") {
    cheb_grid(bar_of(FormulaId::ChebCheb));
    var_cheb_grid(bar_of(FormulaId::VarCheb));
    var_var_grid(bar_of(FormulaId::VarVar));
  } else if (f == "sigma") {
    single(o.m_range, {-6, 8}, "m", verify_sigma);
  } else if (f == "exchange") {
    single(o.k_range, {-10, 12}, "k", verify_exchange);
  } else if (f == "q-commute") {
    single(o.m_range, {-10, 10}, "m", verify_q_commute);
  } else if (f == "positivity") {
    const bool only_n = o.k_range.empty() && !o.n_range.empty();
    const bool only_k = !o.k_range.empty() && o.n_range.empty();
    if (!only_n) single(o.k_range, {-10, 10}, "k", verify_positivity_var);
    if (!only_k) {
      const Range ns = range_or(o.n_range, {1, 8}, "n");
      if (ns.lo < 0) throw UsageError("--n must be nonnegative");
      single(o.n_range, {1, 8}, "n", verify_positivity_cheb);
    }
  } else if (f == "basis-roundtrip" || f == "structure-positivity") {
    const int w = o.window >= 0 ? o.window : (f == "basis-roundtrip" ? 8 : 4);
    std::vector<Point> points;
    for (int x = -w; x <= w; ++x) {
      for (int y = -w; y <= w; ++y) points.push_back({x, y});
    }
    if (f == "basis-roundtrip") {
      for (const Point& p : points) {
        cases.push_back([&basis, p] { return verify_basis_roundtrip(basis, p); });
      }
    } else {
      for (const Point& p : points) {
        for (const Point& r : points) {
          cases.push_back(
              [&basis, p, r] { return verify_structure_positivity(basis, p, r); });
        }
      }
    }
  } else {
    throw UsageError("unknown formula '" + f + "'");
  }
  return cases;
}

int cmd_verify(const Options& o, const KroneckerAlgebra& alg, std::ostream& out) {
  const Basis basis(alg);
  const std::vector<Case> cases = verify_cases(o, alg, basis);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex out_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const VerificationReport r = cases[i]();
      if (!r.ok) failed = true;
      const std::string line = report_line(o, r);
      std::lock_guard lock(out_mutex);
      out << line << '\n' << std::flush;
    }
  };
  const int jobs = std::max(1, o.jobs);
  if (jobs == 1 || cases.size() < 2) {
    worker();
  } else {
    // Serial warm-up populates the shared caches before fan-out.
    {
      const std::size_t first = next++;
      if (first < cases.size()) {
        const VerificationReport r = cases[first]();
        if (!r.ok) failed = true;
        out << report_line(o, r) << '\n' << std::flush;
      }
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return failed ? kFailure : kOk;
}

int cmd_expand(const Options& o, const KroneckerAlgebra& alg, std::ostream& out) {
  const Basis basis(alg);
  const BasisExpansion e = basis.expand(evaluate(o.expr, alg));
  if (json_output(o)) {
    out << to_json(e).dump() << '\n';
  } else {
    for (const auto& [ix, c] : e.coords) {
      out << to_string(ix) << ": " << c.to_string() << '\n';
    }
  }
  return kOk;
}

QuantumSeed read_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::runtime_error("seed file " + path + " is not valid JSON: " + e.what());
  }
  return seed_from_json(j);
}

std::string diag_text(const std::vector<std::int64_t>& diag) {
  std::string s = "(";
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(diag[i]);
  }
  return s + ")";
}

Json pair_json(const CompatiblePair& p) {
  return {{"lambda", to_json(p.lambda.matrix())},
          {"b", to_json(p.b.matrix())},
          {"diag", p.diag}};
}

Direction direction(const Options& o, const QuantumSeed& seed) {
  const int n = seed.pair().b.n();
  if (o.dir < 1 || o.dir > n) {
    throw UsageError("--dir must lie in 1.." + std::to_string(n));
  }
  return Direction{o.dir};
}

int cmd_seed_check(const Options& o, std::ostream& out) {
  const QuantumSeed seed = read_seed(o.seed_file);
  const CompatiblePair& p = seed.pair();
  const IntMatrix product = p.lambda.matrix().transpose() * p.b.matrix();
  if (json_output(o)) {
    out << Json{{"compatible", true},
                {"diag", p.diag},
                {"lambda_t_b", to_json(product)}}
               .dump()
        << '\n';
  } else {
    out << "compatible, diag=" << diag_text(p.diag) << '\n';
  }
  return kOk;
}

int cmd_seed_mutate_pair(const Options& o, std::ostream& out) {
  const QuantumSeed seed = read_seed(o.seed_file);
  if (o.eps != 1 && o.eps != -1) throw UsageError("--eps must be 1 or -1");
  const CompatiblePair p = mutate_pair(seed.pair(), direction(o, seed),
                                       o.eps > 0 ? Sign::Plus : Sign::Minus);
  if (json_output(o)) {
    out << pair_json(p).dump() << '\n';
  } else {
    out << "lambda: " << p.lambda.matrix().to_string() << '\n'
        << "b: " << p.b.matrix().to_string() << '\n'
        << "diag: " << diag_text(p.diag) << '\n';
  }
  return kOk;
}

int cmd_seed_mutate_var(const Options& o, std::ostream& out) {
  const QuantumSeed seed = read_seed(o.seed_file);
  print_element(o, mutate_variable(seed, direction(o, seed)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in the generalized quantum cluster algebra "
               "of Kronecker type",
               "gqca"};
  app.set_version_flag("--version", std::string(GQCA_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-k", o.max_k, "Largest |k| for cluster variables")
      ->check(CLI::Range(2, 100000));
  app.add_option("--cache", o.cache,
                 "Variable cache file (overrides GQCA_CACHE)");
  app.add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");

  auto* var = app.add_subcommand("var", "Print the cluster variable X_k");
  var->add_option("-k", o.k, "Index k")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", o.expr, "Expression, e.g. \"X[0]*X[3]\"")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run an identity sweep");
  verify
      ->add_option("formula", o.formula,
                   "thm1 | thm2 | thm3 | bar | sigma | exchange | q-commute | "
                   "positivity | basis-roundtrip | structure-positivity")
      ->required();
  verify->add_option("--m", o.m_range, "Range a..b for m");
  verify->add_option("--n", o.n_range, "Range a..b for n");
  verify->add_option("--k", o.k_range, "Range a..b for k");
  verify->add_option("--window", o.window, "Half-width of the lattice window")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "Expand in the positive basis");
  expand->add_option("expr", o.expr, "Expression")->required();

  auto* seed = app.add_subcommand("seed", "Compatible pairs and seed mutation");
  seed->require_subcommand(1);
  seed->fallthrough();
  auto* check = seed->add_subcommand("check", "Check compatibility");
  check->add_option("file", o.seed_file, "Seed JSON")->required();
  auto* mpair = seed->add_subcommand("mutate-pair", "Mutate (Lambda, B)");
  mpair->add_option("file", o.seed_file, "Seed JSON")->required();
  mpair->add_option("--dir", o.dir, "Mutation direction, 1-based")->required();
  mpair->add_option("--eps", o.eps, "Sign choice, 1 or -1");
  auto* mvar = seed->add_subcommand("mutate-var", "Mutate a cluster variable");
  mvar->add_option("file", o.seed_file, "Seed JSON")->required();
  mvar->add_option("--dir", o.dir, "Mutation direction, 1-based")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*seed) {
      if (*check) return cmd_seed_check(o, out);
      if (*mpair) return cmd_seed_mutate_pair(o, out);
      return cmd_seed_mutate_var(o, out);
    }

    KroneckerAlgebra alg(o.max_k);
    std::filesystem::path cache_path;
    std::size_t loaded = 0;
    if (!o.no_cache) {
      cache_path = resolve_cache_path(
          o.cache.empty() ? std::nullopt : std::optional<std::string>(o.cache));
      if (std::filesystem::exists(cache_path) && load_cache(cache_path, alg)) {
        loaded = alg.cached_variables().size();
      }
    }

    int code = kOk;
    if (*var) {
      print_element(o, alg.cluster_var(static_cast<int>(o.k)), out);
    } else if (*eval) {
      print_element(o, evaluate(o.expr, alg), out);
    } else if (*verify) {
      code = cmd_verify(o, alg, out);
    } else if (*expand) {
      code = cmd_expand(o, alg, out);
    }

    if (!o.no_cache && alg.cached_variables().size() > loaded) {
      save_cache(cache_path, alg, GQCA_VERSION);
    }
    return code;
  } catch (const UsageError& e) {
    err << "gqca: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "gqca: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace gqca::cli
