#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "tenfold/analysis.hpp"
#include "tenfold/catalog.hpp"
#include "tenfold/error.hpp"
#include "tenfold/multisets.hpp"
#include "tenfold/words.hpp"

using namespace tenfold;
using nlohmann::ordered_json;

namespace
{

struct Globals
{
  std::string format;
  std::uint64_t seed = 0;
  std::size_t cap = default_order_cap;
  std::optional<unsigned> theta_depth;
  unsigned jobs = 1;
  bool timing = false;

  bool json() const
  {
    if (!format.empty())
      return format == "json";
    return !isatty(STDOUT_FILENO);
  }
};

bool is_input_error(Errc c)
{
  switch (c) {
  case Errc::InvalidArgument:
  case Errc::ParseError:
  case Errc::NotAssociative:
  case Errc::NoIdentity:
  case Errc::NoInverse:
  case Errc::CapExceeded:
  case Errc::SignInconsistent:
  case Errc::SignNotSurjective:
    return true;
  default:
    return false;
  }
}

std::vector<Rational> parse_pool(std::string const &text)
{
  std::vector<Rational> pool;
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      long lo = std::stol(text.substr(0, dots));
      long hi = std::stol(text.substr(dots + 2));
      if (lo > hi || hi - lo > 10000)
        throw Error(Errc::InvalidArgument, "bad pool range '" + text + "'");
      for (long v = lo; v <= hi; ++v)
        pool.emplace_back(v);
      return pool;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      std::string item = text.substr(start, comma - start);
      Rational q(item);
      q.canonicalize();
      pool.push_back(q);
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  } catch (std::invalid_argument const &) {
    throw Error(Errc::ParseError, "bad pool '" + text + "'");
  } catch (std::out_of_range const &) {
    throw Error(Errc::ParseError, "bad pool '" + text + "'");
  }
  return pool;
}

AnalysisOptions analysis_options(Globals const &g)
{
  AnalysisOptions o;
  o.seed = g.seed;
  o.jobs = g.jobs;
  o.theta_depth = g.theta_depth;
  return o;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_analyze(Globals const &g, std::string const &source, bool verify_only)
{
  auto t0 = std::chrono::steady_clock::now();
  auto a = analyze(resolve(source, g.cap), source, analysis_options(g));
  if (g.json()) {
    ordered_json r = report_json(a);
    if (verify_only) {
      ordered_json v;
      v["source"] = r["source"];
      v["seed"] = r["seed"];
      v["constraints"] = r["constraints"];
      v["orthogonality"] = r["orthogonality"];
      v["induction"] = r["induction"];
      v["twist_independent"] = r["twist_independent"];
      v["ok"] = r["ok"];
      r = v;
    }
    if (g.timing)
      r["timing_ms"] = elapsed_ms(t0);
    std::cout << r.dump(2) << "\n";
  } else {
    if (verify_only) {
      for (auto const &x : a.constraints.residuals)
        std::cout << (x.value == 0 ? "ok   " : "FAIL ") << x.name << "  (" << x.value << ")\n";
      for (auto const &p : a.constraints.parity_failures)
        std::cout << "FAIL parity: " << p << "\n";
      std::cout << (a.constraints.k4_isomorphism.value_or(false) ? "ok   " : "FAIL ")
                << "K4 isomorphism\n";
      std::cout << (a.orth.ok() && a.orth_hat.ok() ? "ok   " : "FAIL ") << "orthogonality\n";
      std::cout << (a.induction ? "ok   " : "FAIL ") << "induction\n";
      std::cout << (a.ok() ? "OK" : "VIOLATION") << "\n";
    } else {
      std::cout << report_text(a);
    }
    if (g.timing)
      std::cout << "time " << elapsed_ms(t0) << " ms\n";
  }
  return a.ok() ? 0 : 1;
}

int run_theta(Globals const &g, std::string const &source, std::string const &word,
              std::optional<unsigned> element, std::string const &method)
{
  auto rp = resolve(source, g.cap);
  auto w = WordSpec::parse(word);
  Elem x = element.value_or(rp.g().identity());
  if (x >= rp.g().order())
    throw Error(Errc::InvalidArgument, "element index out of range");
  BigInt value;
  if (method == "brute") {
    value = theta_bruteforce(rp, w, x, default_bruteforce_cap, g.jobs);
  } else if (method == "class") {
    auto cd = conjugacy_classes(rp.g());
    auto coeffs = structure_constants(rp.g(), cd, g.jobs);
    value = theta_class_convolution(rp, cd, coeffs, w).values[x];
  } else {
    value = theta_convolution(rp, w).values[x];
  }
  if (g.json()) {
    ordered_json r{{"source", source},
                   {"word", w.str()},
                   {"element", x},
                   {"method", method},
                   {"value", value.get_str()}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << value.get_str() << "\n";
  }
  return 0;
}

int run_recover(Globals const &g, std::string const &source)
{
  auto a = analyze(resolve(source, g.cap), source, analysis_options(g));
  auto r = report_json(a);
  if (g.json()) {
    ordered_json out{{"source", source}, {"recovery", r["recovery"]}};
    std::cout << out.dump(2) << "\n";
  } else {
    auto print = [](char const *label, RecoveredCensus const &c) {
      std::cout << label << "  N_I+N_V+N_IX " << c.pos_v << "  N_II+N_VI+N_VIII " << c.neg_v
                << "  N_I+N_IX " << c.pos_w << "  N_II+N_VIII " << c.neg_w << "  S_v " << c.s_v
                << "  S_w " << c.s_w << "\n";
    };
    if (!a.recovered) {
      std::cout << "recovery failed: " << a.recovery_error << "\n";
      return 1;
    }
    print("theta", *a.recovered);
    print("table", a.from_table);
    auto const &d = r["recovery"]["difference"];
    std::cout << "diff ";
    for (auto it = d.begin(); it != d.end(); ++it)
      std::cout << " " << it.key() << " " << it.value().get<std::int64_t>();
    std::cout << "\n";
  }
  return a.recovered && same_census(*a.recovered, a.from_table) ? 0 : 1;
}

int run_conjecture(Globals const &g, unsigned n, std::string const &pool_text, bool dense,
                   std::uint64_t budget)
{
  auto pool = parse_pool(pool_text);
  auto fam = dense ? ExponentFamily::Dense : ExponentFamily::Sparse;
  auto res = conjecture_search(n, pool, fam, budget, g.jobs);
  if (g.json()) {
    ordered_json r;
    r["n"] = n;
    r["exponents"] = dense ? "k" : "3k-2";
    r["multisets"] = res.multisets;
    r["pairs_examined"] = res.pairs_examined;
    if (res.counterexample)
      r["counterexample"] = {to_string(res.counterexample->first),
                             to_string(res.counterexample->second)};
    else
      r["counterexample"] = nullptr;
    std::cout << r.dump(2) << "\n";
  } else if (res.counterexample) {
    std::cout << "counterexample " << to_string(res.counterexample->first) << " "
              << to_string(res.counterexample->second) << ", " << res.pairs_examined
              << " ordered pairs examined\n";
  } else {
    std::cout << "none found, " << res.pairs_examined << " ordered pairs examined\n";
  }
  return res.counterexample ? 1 : 0;
}

int run_catalog(Globals const &g, bool instances)
{
  if (g.json()) {
    ordered_json r = ordered_json::array();
    if (instances)
      for (auto const &k : standard_instances())
        r.push_back(k);
    else
      for (auto const &e : catalog())
        r.push_back({{"key", e.key}, {"description", e.description}});
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  if (instances) {
    for (auto const &k : standard_instances())
      std::cout << k << "\n";
    return 0;
  }
  for (auto const &e : catalog())
    std::cout << e.key << std::string(e.key.size() < 26 ? 26 - e.key.size() : 1, ' ')
              << e.description << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Real representation types of index-2 group pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  unsigned depth = 0;
  app.add_option("--format", g.format, "json or text (default: text on a terminal)")
    ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "random seed for the character table");
  app.add_option("--cap", g.cap, "largest overgroup order")->envname("TENFOLD_CAP");
  auto depth_opt = app.add_option("--theta-depth", depth, "number of Theta terms per sequence");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", g.timing, "include wall-clock time in the output");

  std::string source;
  auto analyze_cmd = app.add_subcommand("analyze", "full pipeline report");
  analyze_cmd->add_option("source", source, "catalog key or file")->required();
  auto verify_cmd = app.add_subcommand("verify", "constraint residuals only");
  verify_cmd->add_option("source", source, "catalog key or file")->required();

  auto theta_cmd = app.add_subcommand("theta", "count solutions of a word equation");
  std::string word = "v:3", method = "conv";
  unsigned element = 0;
  theta_cmd->add_option("source", source, "catalog key or file")->required();
  theta_cmd->add_option("--word", word, "v:<m>, w:<n> or custom:<letters>");
  auto elem_opt = theta_cmd->add_option("--element", element, "local index in G (default identity)");
  theta_cmd->add_option("--method", method, "conv, class or brute")
    ->check(CLI::IsMember({"conv", "class", "brute"}));

  auto recover_cmd = app.add_subcommand("recover", "census from Theta sequences vs the table");
  recover_cmd->add_option("source", source, "catalog key or file")->required();

  auto conj_cmd = app.add_subcommand("conjecture", "search for colliding multisets");
  unsigned n = 2;
  std::string pool = "-2..2";
  bool dense = false;
  std::uint64_t budget = 1'000'000;
  conj_cmd->add_option("--n", n, "multiset size")->check(CLI::Range(1u, 64u));
  conj_cmd->add_option("--pool", pool, "lo..hi or a comma-separated list of rationals");
  conj_cmd->add_flag("--dense", dense, "use exponents 1..n instead of 3k-2");
  conj_cmd->add_option("--budget", budget, "maximum number of pairs");

  auto catalog_cmd = app.add_subcommand("catalog", "list catalog families");
  bool instances = false;
  catalog_cmd->add_flag("--instances", instances, "list the standard concrete keys");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (depth_opt->count())
    g.theta_depth = depth;

  try {
    if (*analyze_cmd)
      return run_analyze(g, source, false);
    if (*verify_cmd)
      return run_analyze(g, source, true);
    if (*theta_cmd)
      return run_theta(g, source, word,
                       elem_opt->count() ? std::optional<unsigned>(element) : std::nullopt,
                       method);
    if (*recover_cmd)
      return run_recover(g, source);
    if (*conj_cmd)
      return run_conjecture(g, n, pool, dense, budget);
    if (*catalog_cmd)
      return run_catalog(g, instances);
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
