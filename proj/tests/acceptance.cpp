// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "tenfold/analysis.hpp"
#include "tenfold/catalog.hpp"
#include "tenfold/error.hpp"
#include "tenfold/multisets.hpp"

using namespace tenfold;
using Clock = std::chrono::steady_clock;

namespace
{

// Pinned limits. All arithmetic is exact, so every numeric tolerance is zero.
constexpr double worked_example_limit_s = 1.0;
constexpr double degeneration_limit_s = 5.0;
constexpr double constraint_suite_limit_s = 60.0;
constexpr std::uint64_t residual_tolerance = 0;
constexpr std::uint64_t brute_order_limit = 16;  // |Ghat| for the brute-force leg
constexpr std::uint64_t formula_order_limit = 240;
constexpr std::uint64_t twist_coset_limit = 60;
constexpr unsigned random_trials = 100;
constexpr unsigned random_seed = 2024;

struct Criterion
{
  int id;
  std::string name;
  std::function<std::string()> check; // empty string means pass
};

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string timing_note(double s, double limit)
{
  if (s < limit)
    return {};
  std::ostringstream os;
  os << "took " << s << " s, limit " << limit << " s";
  return os.str();
}

std::map<std::string, Analysis> &analyses()
{
  static std::map<std::string, Analysis> cache;
  return cache;
}

Analysis const &analysis_of(std::string const &key)
{
  auto &cache = analyses();
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, analyze(resolve(key), key)).first;
  return it->second;
}

bool all_residuals_zero(ConstraintReport const &r)
{
  for (auto const &x : r.residuals)
    if (static_cast<std::uint64_t>(x.value < 0 ? -x.value : x.value) > residual_tolerance)
      return false;
  return r.parity_failures.empty();
}

std::string worked_example()
{
  auto t0 = Clock::now();
  std::string key = "cyclic-in-dihedral:3";
  auto a = analyze(resolve(key), key);
  auto rp = resolve(key);
  auto id = rp.g().identity();
  BigInt v3 = theta_bruteforce(rp, WordSpec::v(3), id);
  BigInt w1 = theta_bruteforce(rp, WordSpec::w(1), id);
  double s = seconds_since(t0);

  std::ostringstream why;
  for (auto t : all_types) {
    std::uint64_t want = t == DysonType::I ? 1 : t == DysonType::V ? 2 : 0;
    if (a.types[t] != want)
      why << "N_" << roman(t) << "=" << a.types[t] << " ";
  }
  if (a.class_census != ClassCensus{1, 0, 0, 2, 0})
    why << "class census ";
  if (a.ghat.n_real != 3 || a.ghat.c2hat != 0)
    why << "overgroup census ";
  if (a.x.xv.positive != 3 || a.x.xw.positive != 1)
    why << "S_v/S_w ";
  if (v3 != 27 || w1 != 9)
    why << "Theta " << v3.get_str() << "," << w1.get_str() << " ";
  if (a.constraints.residuals.size() != 18 || !all_residuals_zero(a.constraints))
    why << "residuals ";
  why << timing_note(s, worked_example_limit_s);
  return why.str();
}

std::string degeneration()
{
  auto t0 = Clock::now();
  std::ostringstream why;
  unsigned seen = 0;
  for (auto const &key : standard_instances()) {
    if (key.rfind("trivial:", 0) != 0)
      continue;
    ++seen;
    auto rp = resolve(key);
    auto a = analyze(rp, key);
    for (auto t : {DysonType::II, DysonType::III, DysonType::V, DysonType::VI, DysonType::VII,
                   DysonType::IX, DysonType::X})
      if (a.types[t] != 0)
        why << key << " N_" << roman(t) << " ";
    // classical indicator degrees, by the ordinary F alone
    std::vector<std::uint64_t> real, complex, quat;
    for (std::size_t chi = 0; chi < a.table.size(); ++chi) {
      int f = a.types.indicators[chi].f;
      (f == 1 ? real : f == 0 ? complex : quat).push_back(a.table.degrees[chi]);
    }
    for (auto *v : {&real, &complex, &quat})
      std::sort(v->begin(), v->end());
    if (a.types.degrees(DysonType::I) != real || a.types.degrees(DysonType::IV) != complex ||
        a.types.degrees(DysonType::VIII) != quat)
      why << key << " degrees ";
    if (key == "trivial:Q8" && (a.types.degrees(DysonType::I) != std::vector<std::uint64_t>{1, 1, 1, 1} ||
                                a.types.degrees(DysonType::VIII) != std::vector<std::uint64_t>{2}))
      why << "Q8 degrees ";
  }
  if (seen == 0)
    why << "no trivial instances ";
  why << timing_note(seconds_since(t0), degeneration_limit_s);
  return why.str();
}

std::string constraint_suite()
{
  auto t0 = Clock::now();
  std::ostringstream why;
  unsigned pairs = 0;
  bool have_an6 = false, have_d12 = false;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    if (a.rp.ghat().order() > formula_order_limit && key != "an-in-sn:6")
      continue;
    ++pairs;
    have_an6 = have_an6 || key == "an-in-sn:6";
    have_d12 = have_d12 || key == "cyclic-in-dihedral:12";
    if (!all_residuals_zero(a.constraints))
      why << key << " ";
  }
  if (pairs < 15)
    why << "only " << pairs << " pairs ";
  if (!have_an6 || !have_d12)
    why << "missing required families ";
  why << timing_note(seconds_since(t0), constraint_suite_limit_s);
  return why.str();
}

std::string k4_isomorphism()
{
  std::ostringstream why;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    if (orbit_type_census(a.on_characters) != orbit_type_census(a.on_classes))
      why << key << " ";
  }
  return why.str();
}

std::string theta_agreement()
{
  std::ostringstream why;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    auto order_hat = a.rp.ghat().order();
    if (order_hat > formula_order_limit)
      continue;
    if (order_hat <= brute_order_limit) {
      auto id = a.rp.g().identity();
      for (auto const &w : {WordSpec::v(3), WordSpec::v(4), WordSpec::w(1), WordSpec::w(2)}) {
        auto conv = theta_convolution(a.rp, w);
        auto cls = theta_class_convolution(a.rp, a.classes, a.coeffs, w);
        auto brute = theta_bruteforce(a.rp, w, id);
        if (conv != cls || conv.values[id] != brute)
          why << key << " " << w.str() << " ";
      }
    }
    // m <= 1 + |Cl(G)| means power sums up to |Cl(G)| - 1
    unsigned k_max = static_cast<unsigned>(std::max<std::size_t>(a.classes.count(), 2) - 1);
    auto rep = power_sum_identity_check(a.rp, a.classes, a.coeffs, a.x, k_max);
    if (!rep.ok())
      why << key << " formula ";
  }
  return why.str();
}

std::string blind_recovery()
{
  std::ostringstream why;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    auto seq = theta_sequences(a.rp, a.classes, a.coeffs, required_v_terms(a.classes.count()),
                               required_w_terms(a.rp.g().order()));
    try {
      auto rc = recover_census_from_theta(seq);
      auto const &t = a.from_table;
      if (rc.pos_v != t.pos_v || rc.neg_v != t.neg_v || rc.pos_w != t.pos_w ||
          rc.s_v != t.s_v || rc.s_w != t.s_w)
        why << key << " ";
    } catch (Error const &e) {
      why << key << " (" << e.what() << ") ";
    }
  }
  return why.str();
}

std::string table_validity()
{
  std::ostringstream why;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    auto sum_sq = [](ModCharTable const &t) {
      std::uint64_t s = 0;
      for (auto d : t.degrees)
        s += d * d;
      return s;
    };
    if (!a.orth.ok() || !a.orth_hat.ok() || sum_sq(a.table) != a.rp.g().order() ||
        sum_sq(a.table_hat) != a.rp.ghat().order())
      why << key << " ";
    auto t4 = dixon_character_table(a.rp.ghat(), conjugacy_classes(a.rp.ghat()), a.ctx, {0, 4});
    auto t1 = dixon_character_table(a.rp.ghat(), conjugacy_classes(a.rp.ghat()), a.ctx, {0, 1});
    if (t4 != t1 || t1 != a.table_hat)
      why << key << " threads ";
  }
  return why.str();
}

std::string multiset_machinery()
{
  std::ostringstream why;
  std::mt19937_64 rng(random_seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), len(1, 6);
  for (unsigned trial = 0; trial < random_trials; ++trial) {
    std::vector<Rational> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      v.push_back(q);
    }
    RationalMultiset x(v);
    auto sums = power_sums(x, static_cast<unsigned>(n));
    try {
      if (newton_recover(sums) != x)
        why << "newton " << to_string(x) << " ";
    } catch (Error const &e) {
      why << "newton " << to_string(x) << " ";
    }
  }

  std::uniform_int_distribution<int> order_pick(1, 48), mult(0, 3);
  for (unsigned trial = 0; trial < random_trials; ++trial) {
    auto y = candidate_values(static_cast<std::uint64_t>(order_pick(rng)));
    std::vector<Rational> v;
    std::vector<std::uint64_t> expected;
    for (auto const &q : y) {
      int c = mult(rng);
      expected.push_back(static_cast<std::uint64_t>(c));
      v.insert(v.end(), static_cast<std::size_t>(c), q);
    }
    std::uint64_t zeros = static_cast<std::uint64_t>(mult(rng));
    v.insert(v.end(), zeros, Rational(0));
    std::vector<unsigned> ks;
    for (unsigned k = 1; k <= y.size(); ++k)
      ks.push_back(3 * k - 2);
    auto sums = power_sums(RationalMultiset(v), ks);
    try {
      auto m = recover_multiplicities(y, v.size(), sums, true);
      if (m.counts != expected || m.zero != zeros)
        why << "multiplicities trial " << trial << " ";
    } catch (Error const &e) {
      why << "multiplicities trial " << trial << " (" << e.what() << ") ";
    }
  }

  std::vector<Rational> pool;
  for (int k = -3; k <= 3; ++k)
    pool.emplace_back(k);
  for (unsigned n = 1; n <= 3; ++n) {
    auto r = conjecture_search(n, pool, ExponentFamily::Sparse, 10'000'000, 4);
    if (r.counterexample)
      why << "collision at n=" << n << ": " << to_string(r.counterexample->first) << " "
          << to_string(r.counterexample->second) << " ";
  }
  return why.str();
}

std::string twist_independence_check()
{
  std::ostringstream why;
  unsigned checked = 0;
  for (auto const &key : standard_instances()) {
    auto const &a = analysis_of(key);
    if (a.rp.gsharp_indices().size() > twist_coset_limit)
      continue;
    ++checked;
    if (!twist_independence(a.rp, a.classes, a.table))
      why << key << " ";
  }
  if (checked == 0)
    why << "nothing checked ";
  return why.str();
}

} // namespace

int main()
{
  std::vector<Criterion> criteria{
    {1, "worked example C3 in S3", worked_example},
    {2, "trivial structure degenerates to the classical census", degeneration},
    {3, "constraint residuals vanish", constraint_suite},
    {4, "K4 orbit types agree on characters and classes", k4_isomorphism},
    {5, "Theta by brute force, convolution and characters", theta_agreement},
    {6, "census recovered from Theta sequences", blind_recovery},
    {7, "character tables valid and thread independent", table_validity},
    {8, "multiset recovery and collision search", multiset_machinery},
    {9, "K4 tables independent of the twist element", twist_independence_check},
  };
  int failures = 0;
  for (auto const &c : criteria) {
    std::string why;
    try {
      why = c.check();
    } catch (std::exception const &e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::cout << "PASS " << c.id << " " << c.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.id << " " << c.name << ": " << why << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
