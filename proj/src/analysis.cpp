#include "tenfold/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "tenfold/error.hpp"

namespace tenfold
{

namespace
{

using nlohmann::ordered_json;

ordered_json census_json(RecoveredCensus const &c)
{
  ordered_json j;
  j["N_I+N_V+N_IX"] = c.pos_v;
  j["N_II+N_VI+N_VIII"] = c.neg_v;
  j["N_I+N_IX"] = c.pos_w;
  j["N_II+N_VIII"] = c.neg_w;
  j["S_v"] = c.s_v;
  j["S_w"] = c.s_w;
  return j;
}

ordered_json multiset_json(RationalMultiset const &x)
{
  ordered_json arr = ordered_json::array();
  for (auto const &q : x.entries())
    arr.push_back(q.get_str());
  return arr;
}

ordered_json orbit_json(std::array<std::uint64_t, 5> const &c)
{
  ordered_json j;
  for (auto s : {Stabilizer::Full, Stabilizer::A, Stabilizer::B, Stabilizer::C,
                 Stabilizer::Trivial})
    j[std::string(stabilizer_name(s))] = c[static_cast<std::size_t>(s)];
  return j;
}

std::int64_t diff(std::uint64_t a, std::uint64_t b)
{ return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b); }

} // namespace

bool Analysis::theta_ok() const
{
  return identity.ok() &&
         std::all_of(theta_checks.begin(), theta_checks.end(), [](auto const &c) { return c.agree; });
}

bool Analysis::ok() const
{
  return orth.ok() && orth_hat.ok() && induction.has_value() && theta_ok() &&
         recovered.has_value() && same_census(*recovered, from_table) && constraints.ok() &&
         twist_independent.value_or(true);
}

bool twist_independence(RealPair const &rp, ClassData const &cd, ModCharTable const &t)
{
  auto base_cl = k4_on_classes(rp, cd);
  auto base_ch = k4_on_characters(t, rp);
  for (auto x : rp.gsharp_indices())
    if (!(k4_on_classes(rp, cd, x) == base_cl) || !(k4_on_characters(t, rp, x) == base_ch))
      return false;
  return true;
}

Analysis analyze(RealPair rp, std::string source, AnalysisOptions const &opts)
{
  Analysis a(std::move(source), std::move(rp));
  auto const &G = a.rp.g();
  auto const &Gh = a.rp.ghat();
  a.seed = opts.seed;
  DixonOptions dopt{opts.seed, opts.jobs};

  a.classes = conjugacy_classes(G);
  a.coeffs = structure_constants(G, a.classes, opts.jobs);
  a.ctx = choose_prime(Gh);
  a.table = dixon_character_table(G, a.classes, a.ctx, dopt);
  auto classes_hat = conjugacy_classes(Gh);
  a.table_hat = dixon_character_table(Gh, classes_hat, a.ctx, dopt);
  a.orth = verify_orthogonality(a.table);
  a.orth_hat = verify_orthogonality(a.table_hat);

  a.on_classes = k4_on_classes(a.rp, a.classes);
  a.on_characters = k4_on_characters(a.table, a.rp);
  a.class_census = tenfold::class_census(a.on_classes);
  a.types = dyson_census(a.table, a.rp);
  a.ghat = ghat_census(a.table_hat, a.rp);
  try {
    a.induction = induction_correspondence(a.table, a.table_hat, a.rp);
  } catch (Error const &e) {
    a.induction_error = e.what();
  }

  a.x = build_indicator_multisets(a.table, a.types.indicators);
  unsigned v_terms = required_v_terms(a.classes.count());
  unsigned w_terms = required_w_terms(G.order());
  if (opts.theta_depth)
    v_terms = w_terms = *opts.theta_depth;
  a.sequences = theta_sequences(a.rp, a.classes, a.coeffs, v_terms, w_terms);
  a.identity = power_sum_identity_check(a.rp, a.classes, a.coeffs, a.x,
                                        std::max(v_terms, 3 * w_terms - 2));

  for (auto const &w : {WordSpec::v(3), WordSpec::v(4), WordSpec::w(1), WordSpec::w(2)}) {
    ThetaCheck c;
    c.word = w.str();
    auto conv = theta_convolution(a.rp, w);
    auto cls = theta_class_convolution(a.rp, a.classes, a.coeffs, w);
    c.agree = conv == cls;
    try {
      auto brute = theta_bruteforce_all(a.rp, w, opts.bruteforce_cap, opts.jobs);
      c.bruteforce_run = true;
      c.agree = c.agree && brute == conv;
    } catch (Error const &e) {
      if (e.code() != Errc::CapExceeded)
        throw;
    }
    c.at_identity = conv.values[G.identity()];
    a.theta_checks.push_back(std::move(c));
  }

  a.from_table = census_from_types(a.types, a.x);
  try {
    a.recovered = recover_census_from_theta(a.sequences);
  } catch (Error const &e) {
    a.recovery_error = e.what();
  }

  auto const &sv_src = a.recovered ? *a.recovered : a.from_table;
  a.constraints = verify_constraints(a.types, a.class_census, a.ghat,
                                     static_cast<std::int64_t>(sv_src.s_v),
                                     static_cast<std::int64_t>(sv_src.s_w));
  a.constraints.k4_isomorphism = k4_isomorphism_check(a.on_characters, a.on_classes);

  if (a.rp.gsharp_indices().size() <= opts.twist_limit)
    a.twist_independent = twist_independence(a.rp, a.classes, a.table);
  return a;
}

nlohmann::ordered_json report_json(Analysis const &a)
{
  ordered_json r;
  r["source"] = a.source;
  r["group"] = {{"order", a.rp.g().order()},
                {"order_hat", a.rp.ghat().order()},
                {"exponent", a.rp.g().exponent()},
                {"exponent_hat", a.rp.ghat().exponent()},
                {"classes", a.classes.count()},
                {"classes_hat", a.ghat.class_count}};
  r["prime"] = {{"p", a.ctx.p}, {"e", a.ctx.e}, {"zeta", a.ctx.zeta}};
  r["seed"] = a.seed;

  auto const &cc = a.class_census;
  r["class_census"] = {{"C_1", cc.c1}, {"C_2a", cc.c2a}, {"C_2b", cc.c2b},
                       {"C_2c", cc.c2c}, {"C_4", cc.c4}};

  ordered_json types;
  for (auto t : all_types) {
    ordered_json row;
    row["label"] = dyson_label(t);
    row["count"] = a.types[t];
    row["degrees"] = a.types.degrees(t);
    types[std::string(roman(t))] = row;
  }
  r["type_census"] = types;
  r["indicator_census"] = {{"real", a.types.n_real},
                           {"complex", a.types.n_complex},
                           {"quaternionic", a.types.n_quaternionic}};

  ordered_json chars = ordered_json::array();
  for (std::size_t chi = 0; chi < a.table.size(); ++chi)
    chars.push_back({{"degree", a.table.degrees[chi]},
                     {"F", a.types.indicators[chi].f},
                     {"F_sharp", a.types.indicators[chi].fsharp},
                     {"type", roman(a.types.types[chi])},
                     {"stabilizer", stabilizer_name(stabilizer_of(a.on_characters, chi))}});
  r["characters"] = chars;

  r["ghat"] = {{"N_R", a.ghat.n_real},
               {"N_C", a.ghat.n_complex},
               {"N_H", a.ghat.n_quaternionic},
               {"C_2", a.ghat.c2hat}};

  ordered_json ind;
  ind["ok"] = a.induction.has_value();
  if (a.induction) {
    ind["one_to_two"] = a.induction->one_to_two;
    ind["two_to_one"] = a.induction->two_to_one;
  } else {
    ind["error"] = a.induction_error;
  }
  r["induction"] = ind;

  r["multisets"] = {{"X_v", multiset_json(a.x.xv.entries)},
                    {"S_v", a.x.xv.positive},
                    {"X_w", multiset_json(a.x.xw.entries)},
                    {"S_w", a.x.xw.positive}};

  ordered_json th;
  th["v"] = ordered_json::array();
  for (auto const &v : a.sequences.v)
    th["v"].push_back(v.get_str());
  th["w"] = ordered_json::array();
  for (auto const &w : a.sequences.w)
    th["w"].push_back(w.get_str());
  ordered_json checks = ordered_json::array();
  for (auto const &c : a.theta_checks)
    checks.push_back({{"word", c.word},
                      {"at_identity", c.at_identity.get_str()},
                      {"bruteforce", c.bruteforce_run},
                      {"agree", c.agree}});
  th["checks"] = checks;
  ordered_json viol = ordered_json::array();
  for (auto const &v : a.identity.violations)
    viol.push_back({{"word", v.word},
                    {"counted", v.counted.get_str()},
                    {"predicted", v.predicted.get_str()}});
  th["identity"] = {{"v_checked", a.identity.v_checked},
                    {"w_checked", a.identity.w_checked},
                    {"violations", viol}};
  r["theta"] = th;

  ordered_json rec;
  if (a.recovered) {
    rec["from_theta"] = census_json(*a.recovered);
    rec["from_table"] = census_json(a.from_table);
    auto const &x = *a.recovered;
    auto const &y = a.from_table;
    rec["difference"] = {{"N_I+N_V+N_IX", diff(x.pos_v, y.pos_v)},
                         {"N_II+N_VI+N_VIII", diff(x.neg_v, y.neg_v)},
                         {"N_I+N_IX", diff(x.pos_w, y.pos_w)},
                         {"N_II+N_VIII", diff(x.neg_w, y.neg_w)},
                         {"S_v", diff(x.s_v, y.s_v)},
                         {"S_w", diff(x.s_w, y.s_w)}};
    rec["terms"] = {{"v", x.v_terms_used}, {"w", x.w_terms_used}};
  } else {
    rec["from_table"] = census_json(a.from_table);
    rec["error"] = a.recovery_error;
  }
  r["recovery"] = rec;

  ordered_json res;
  for (auto const &x : a.constraints.residuals)
    res[x.name] = x.value;
  r["constraints"] = {{"residuals", res},
                      {"parity_failures", a.constraints.parity_failures},
                      {"k4_isomorphism", a.constraints.k4_isomorphism.value_or(false)}};
  r["orbit_types"] = {{"characters", orbit_json(orbit_type_census(a.on_characters))},
                      {"classes", orbit_json(orbit_type_census(a.on_classes))}};
  r["orthogonality"] = {{"g", a.orth.ok()}, {"ghat", a.orth_hat.ok()}};
  r["twist_independent"] =
    a.twist_independent ? ordered_json(*a.twist_independent) : ordered_json(nullptr);
  r["ok"] = a.ok();
  return r;
}

std::string report_text(Analysis const &a)
{
  std::ostringstream os;
  auto const &cc = a.class_census;
  os << a.source << ": |G| = " << a.rp.g().order() << ", |Ghat| = " << a.rp.ghat().order()
     << ", " << a.classes.count() << " classes, p = " << a.ctx.p << ", seed " << a.seed
     << "\n\n";
  os << "type  label  count  degrees\n";
  for (auto t : all_types) {
    std::string name(roman(t)), label(dyson_label(t)), count = std::to_string(a.types[t]);
    os << name << std::string(6 - name.size(), ' ') << label << std::string(7 - label.size(), ' ')
       << count << std::string(count.size() < 7 ? 7 - count.size() : 1, ' ') << "[";
    auto const &d = a.types.degrees(t);
    for (std::size_t i = 0; i < d.size(); ++i)
      os << (i ? "," : "") << d[i];
    os << "]\n";
  }
  os << "\nclasses  C_1 " << cc.c1 << "  C_2a " << cc.c2a << "  C_2b " << cc.c2b << "  C_2c "
     << cc.c2c << "  C_4 " << cc.c4 << "\n";
  os << "overgroup  N_R " << a.ghat.n_real << "  N_C " << a.ghat.n_complex << "  N_H "
     << a.ghat.n_quaternionic << "  C_2 " << a.ghat.c2hat << "\n";
  os << "X_v " << to_string(a.x.xv.entries) << "  S_v " << a.x.xv.positive << "\n";
  os << "X_w " << to_string(a.x.xw.entries) << "  S_w " << a.x.xw.positive << "\n";
  for (auto const &c : a.theta_checks)
    os << "Theta(" << c.word << ", 1) = " << c.at_identity.get_str()
       << (c.agree ? "" : "  MISMATCH") << (c.bruteforce_run ? "" : "  (no brute force)")
       << "\n";
  if (a.recovered) {
    auto const &x = *a.recovered;
    auto const &y = a.from_table;
    os << "recovered from Theta  N_I+N_V+N_IX " << x.pos_v << "  N_II+N_VI+N_VIII " << x.neg_v
       << "  N_I+N_IX " << x.pos_w << "  S_v " << x.s_v << "  S_w " << x.s_w << "\n";
    os << "from the table        N_I+N_V+N_IX " << y.pos_v << "  N_II+N_VI+N_VIII " << y.neg_v
       << "  N_I+N_IX " << y.pos_w << "  S_v " << y.s_v << "  S_w " << y.s_w << "\n";
  } else {
    os << "recovery failed: " << a.recovery_error << "\n";
  }
  std::size_t nonzero = 0;
  for (auto const &x : a.constraints.residuals)
    if (x.value != 0) {
      ++nonzero;
      os << "residual " << x.name << " = " << x.value << "\n";
    }
  for (auto const &p : a.constraints.parity_failures)
    os << "parity: " << p << "\n";
  os << "residuals: " << a.constraints.residuals.size() - nonzero << "/"
     << a.constraints.residuals.size() << " zero";
  os << ", K4 isomorphism " << (a.constraints.k4_isomorphism.value_or(false) ? "yes" : "no");
  if (!a.induction)
    os << "\ninduction: " << a.induction_error;
  os << "\n" << (a.ok() ? "OK" : "VIOLATION") << "\n";
  return os.str();
}

} // namespace tenfold
