#include "tenfold/tenfold.hpp"

#include <algorithm>
#include <map>

#include "tenfold/error.hpp"
#include "tenfold/modp.hpp"

namespace tenfold
{

namespace
{

Elem resolve_twist(RealPair const &rp, std::optional<Elem> twist)
{
  Elem x = twist.value_or(rp.default_twist());
  if (x >= rp.ghat().order() || rp.in_g(x))
    throw Error(Errc::InvalidArgument, "twist element must lie in the non-identity coset");
  return x;
}

constexpr std::array<TypeRow, 10> type_rows{{
  {1, 1, true, Stabilizer::Full, 1},      // I
  {1, -1, true, Stabilizer::Full, 0},     // II
  {1, 0, false, Stabilizer::A, 1},        // III
  {0, 0, true, Stabilizer::B, 0},         // IV
  {0, 1, false, Stabilizer::C, 1},        // V
  {0, -1, false, Stabilizer::C, -1},      // VI
  {0, 0, false, Stabilizer::Trivial, 0},  // VII
  {-1, -1, true, Stabilizer::Full, -1},   // VIII
  {-1, 1, true, Stabilizer::Full, 0},     // IX
  {-1, 0, false, Stabilizer::A, -1},      // X
}};

int lift_indicator(std::uint64_t residue, std::uint64_t p, std::size_t chi)
{
  auto v = modp::lift(residue, p);
  if (v < -1 || v > 1)
    throw Error(Errc::IndicatorOutOfRange,
                "indicator of character " + std::to_string(chi) + " lifts to " + std::to_string(v));
  return static_cast<int>(v);
}

std::size_t idx(DysonType t) { return static_cast<std::size_t>(t); }

} // namespace

bool K4Action::is_valid() const
{
  std::size_t n = a.size();
  if (b.size() != n || c.size() != n)
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] >= n || b[i] >= n || c[i] >= n)
      return false;
    if (a[a[i]] != i || b[b[i]] != i || c[c[i]] != i)
      return false;
    if (a[b[i]] != b[a[i]] || c[i] != a[b[i]])
      return false;
  }
  return true;
}

std::string_view stabilizer_name(Stabilizer s)
{
  switch (s) {
  case Stabilizer::Full: return "K4";
  case Stabilizer::A: return "<a>";
  case Stabilizer::B: return "<b>";
  case Stabilizer::C: return "<c>";
  case Stabilizer::Trivial: return "1";
  }
  return "?";
}

Stabilizer stabilizer_of(K4Action const &act, std::size_t i)
{
  bool fa = act.a[i] == i, fb = act.b[i] == i, fc = act.c[i] == i;
  if (fa && fb)
    return Stabilizer::Full;
  if (fa)
    return Stabilizer::A;
  if (fb)
    return Stabilizer::B;
  if (fc)
    return Stabilizer::C;
  return Stabilizer::Trivial;
}

K4Action k4_on_classes(RealPair const &rp, ClassData const &cd, std::optional<Elem> twist)
{
  Elem x = resolve_twist(rp, twist);
  auto const &ghat = rp.ghat();
  std::size_t n = cd.count();
  K4Action act;
  act.a.assign(cd.inverse_class.begin(), cd.inverse_class.end());
  act.b.resize(n);
  act.c.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Elem y = ghat.conj(x, rp.embed(cd.representative(k)));
    act.b[k] = cd.class_of[rp.local(y)];
  }
  for (std::size_t k = 0; k < n; ++k)
    act.c[k] = act.a[act.b[k]];
  return act;
}

ClassCensus class_census(K4Action const &act)
{
  ClassCensus cc;
  for (std::size_t i = 0; i < act.size(); ++i) {
    switch (stabilizer_of(act, i)) {
    case Stabilizer::Full: ++cc.c1; break;
    case Stabilizer::A: ++cc.c2a; break;
    case Stabilizer::B: ++cc.c2b; break;
    case Stabilizer::C: ++cc.c2c; break;
    case Stabilizer::Trivial: ++cc.c4; break;
    }
  }
  return cc;
}

std::vector<IndicatorPair> fs_indicators(ModCharTable const &t, RealPair const &rp)
{
  auto const p = t.ctx.p;
  auto const &g = rp.g();
  auto const &ghat = rp.ghat();
  auto const &cd = t.classes;
  if (t.group_order != g.order())
    throw Error(Errc::InvalidArgument, "table does not belong to the kernel group");
  auto const scale = modp::inv(g.order() % p, p);

  std::vector<IndicatorPair> out(t.size());
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    auto const &row = t.values[chi];
    std::uint64_t f = 0, fs = 0;
    for (Elem x = 0; x < g.order(); ++x)
      f = modp::add(f, row[cd.class_of[g.square(x)]], p);
    for (Elem x : rp.gsharp_indices())
      fs = modp::add(fs, row[cd.class_of[rp.local(ghat.square(x))]], p);
    out[chi].f = lift_indicator(modp::mul(f, scale, p), p, chi);
    out[chi].fsharp = lift_indicator(modp::mul(fs, scale, p), p, chi);
  }
  return out;
}

K4Action k4_on_characters(ModCharTable const &t, RealPair const &rp, std::optional<Elem> twist)
{
  auto cls = k4_on_classes(rp, t.classes, twist);
  std::map<std::vector<std::uint64_t>, std::uint32_t> row_index;
  for (std::size_t chi = 0; chi < t.size(); ++chi)
    row_index.emplace(t.values[chi], static_cast<std::uint32_t>(chi));

  auto find = [&](std::vector<std::uint64_t> const &row, std::size_t chi, char g) {
    auto it = row_index.find(row);
    if (it == row_index.end())
      throw Error(Errc::RowNotFound,
                  std::string("image of character ") + std::to_string(chi) + " under " + g);
    return it->second;
  };

  std::size_t c = t.classes.count();
  K4Action act;
  act.a.resize(t.size());
  act.b.resize(t.size());
  act.c.resize(t.size());
  std::vector<std::uint64_t> img(c);
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    auto const &row = t.values[chi];
    for (std::size_t k = 0; k < c; ++k)
      img[k] = row[cls.a[k]];
    act.a[chi] = find(img, chi, 'a');
    for (std::size_t k = 0; k < c; ++k)
      img[k] = row[cls.b[k]];
    act.b[chi] = find(img, chi, 'b');
  }
  for (std::size_t chi = 0; chi < t.size(); ++chi)
    act.c[chi] = act.a[act.b[chi]];
  return act;
}

std::string_view roman(DysonType t)
{
  static constexpr std::array<std::string_view, 10> names{
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  return names[idx(t)];
}

std::string_view dyson_label(DysonType t)
{
  static constexpr std::array<std::string_view, 10> labels{
    "RR", "QR", "CR", "CC2", "RC", "QC", "CC1", "QQ", "RQ", "CQ"};
  return labels[idx(t)];
}

TypeRow const &type_row(DysonType t) { return type_rows[idx(t)]; }

DysonType classify(IndicatorPair ind, bool b_fixed)
{
  if (ind.f < -1 || ind.f > 1 || ind.fsharp < -1 || ind.fsharp > 1)
    throw Error(Errc::InvalidArgument, "indicators must lie in {-1,0,1}");
  for (auto t : all_types) {
    auto const &row = type_row(t);
    if (row.f != ind.f || row.fsharp != ind.fsharp)
      continue;
    if (row.b_fixed == b_fixed)
      return t;
  }
  throw Error(Errc::StabilizerMismatch,
              "indicators (" + std::to_string(ind.f) + ", " + std::to_string(ind.fsharp) +
                ") are incompatible with b-fixed = " + (b_fixed ? "yes" : "no"));
}

DysonType classify(IndicatorPair ind, Stabilizer stab)
{
  bool b_fixed = stab == Stabilizer::Full || stab == Stabilizer::B;
  auto t = classify(ind, b_fixed);
  if (type_row(t).stab != stab)
    throw Error(Errc::StabilizerMismatch,
                "type " + std::string(roman(t)) + " requires stabilizer " +
                  std::string(stabilizer_name(type_row(t).stab)) + ", found " +
                  std::string(stabilizer_name(stab)));
  return t;
}

std::uint64_t TypeCensus::total() const
{
  std::uint64_t s = 0;
  for (auto x : n)
    s += x;
  return s;
}

TypeCensus dyson_census(ModCharTable const &t, RealPair const &rp)
{
  TypeCensus tc;
  tc.indicators = fs_indicators(t, rp);
  auto act = k4_on_characters(t, rp);
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    auto const &ind = tc.indicators[chi];
    auto type = classify(ind, stabilizer_of(act, chi));
    tc.types.push_back(type);
    ++tc.n[idx(type)];
    tc.dims[idx(type)].push_back(t.degrees[chi]);
    if (ind.f == 1)
      ++tc.n_real;
    else if (ind.f == 0)
      ++tc.n_complex;
    else
      ++tc.n_quaternionic;
  }
  for (auto &d : tc.dims)
    std::sort(d.begin(), d.end());
  return tc;
}

GhatCensus ghat_census(ModCharTable const &t_ghat, RealPair const &rp)
{
  auto const &ghat = rp.ghat();
  auto const &cd = t_ghat.classes;
  auto const p = t_ghat.ctx.p;
  if (t_ghat.group_order != ghat.order())
    throw Error(Errc::InvalidArgument, "table does not belong to the overgroup");
  auto const scale = modp::inv(ghat.order() % p, p);

  GhatCensus gc;
  gc.class_count = cd.count();
  for (std::size_t k = 0; k < cd.count(); ++k)
    if (cd.inverse_class[k] != k)
      ++gc.c2hat;
  for (std::size_t psi = 0; psi < t_ghat.size(); ++psi) {
    std::uint64_t acc = 0;
    for (Elem x = 0; x < ghat.order(); ++x)
      acc = modp::add(acc, t_ghat.values[psi][cd.class_of[ghat.square(x)]], p);
    int v = lift_indicator(modp::mul(acc, scale, p), p, psi);
    gc.fhat.push_back(v);
    if (v == 1)
      ++gc.n_real;
    else if (v == 0)
      ++gc.n_complex;
    else
      ++gc.n_quaternionic;
  }
  return gc;
}

GhatCensus ghat_census(RealPair const &rp, PrimeContext const &ctx, DixonOptions const &opts)
{
  auto cd = conjugacy_classes(rp.ghat());
  auto t = dixon_character_table(rp.ghat(), cd, ctx, opts);
  return ghat_census(t, rp);
}

InductionReport induction_correspondence(ModCharTable const &t_g, ModCharTable const &t_ghat,
                                         RealPair const &rp)
{
  if (!(t_g.ctx == t_ghat.ctx))
    throw Error(Errc::InvalidArgument, "both tables must share one prime context");
  auto const p = t_g.ctx.p;
  auto const &cg = t_g.classes;
  auto const &ch = t_ghat.classes;
  std::size_t const c = cg.count();

  // Ghat-class of each G-class
  std::vector<std::size_t> hat_of(c);
  for (std::size_t k = 0; k < c; ++k)
    hat_of[k] = ch.class_of[rp.embed(cg.representative(k))];

  auto indicators = fs_indicators(t_g, rp);
  auto act = k4_on_characters(t_g, rp);
  auto gc = ghat_census(t_ghat, rp);

  std::map<std::vector<std::uint64_t>, std::size_t> hat_index;
  for (std::size_t psi = 0; psi < t_ghat.size(); ++psi)
    hat_index.emplace(t_ghat.values[psi], psi);
  std::vector<std::size_t> eps_twist(t_ghat.size());
  for (std::size_t psi = 0; psi < t_ghat.size(); ++psi) {
    auto row = t_ghat.values[psi];
    for (std::size_t k = 0; k < ch.count(); ++k)
      if (rp.sign(ch.representative(k)) < 0)
        row[k] = modp::neg(row[k], p);
    auto it = hat_index.find(row);
    if (it == hat_index.end())
      throw Error(Errc::CorrespondenceViolation, "sign twist of a character is not irreducible");
    eps_twist[psi] = it->second;
  }

  std::vector<std::vector<std::uint64_t>> restricted(t_ghat.size(),
                                                     std::vector<std::uint64_t>(c));
  for (std::size_t psi = 0; psi < t_ghat.size(); ++psi)
    for (std::size_t k = 0; k < c; ++k)
      restricted[psi][k] = t_ghat.values[psi][hat_of[k]];

  auto const scale = modp::inv(t_g.group_order % p, p);
  InductionReport rep;
  for (std::size_t chi = 0; chi < t_g.size(); ++chi) {
    auto fail = [&](std::string const &why) {
      throw Error(Errc::CorrespondenceViolation, "character " + std::to_string(chi) + ": " + why);
    };
    auto type = classify(indicators[chi], stabilizer_of(act, chi));
    int const expect_fhat = type_row(type).fhat;
    int const fsum = indicators[chi].f + indicators[chi].fsharp;

    CorrespondenceEntry entry;
    entry.chi = chi;
    entry.b_fixed = act.b[chi] == chi;
    std::vector<std::int64_t> mult;
    for (std::size_t psi = 0; psi < t_ghat.size(); ++psi) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < c; ++k)
        acc = modp::add(acc, modp::mul(cg.sizes[k] % p,
                                       modp::mul(restricted[psi][k],
                                                 t_g.values[chi][cg.inverse_class[k]], p), p), p);
      auto m = modp::lift(modp::mul(acc, scale, p), p);
      if (m < 0)
        fail("negative restriction multiplicity");
      if (m > 0) {
        entry.partners.push_back(psi);
        entry.fhat.push_back(gc.fhat[psi]);
        mult.push_back(m);
      }
    }

    if (entry.b_fixed) {
      if (entry.partners.size() != 2)
        fail("b-fixed character must have exactly two partners");
      auto psi1 = entry.partners[0], psi2 = entry.partners[1];
      if (mult[0] != 1 || mult[1] != 1)
        fail("restriction multiplicity must be 1");
      if (restricted[psi1] != t_g.values[chi] || restricted[psi2] != t_g.values[chi])
        fail("partner does not restrict to the character");
      if (eps_twist[psi1] != psi2 || eps_twist[psi1] == psi1)
        fail("partners are not swapped by the sign character");
      for (int fh : entry.fhat)
        if (2 * fh != fsum || fh != expect_fhat)
          fail("overgroup indicator does not match (F + F#)/2");
      ++rep.one_to_two;
    } else {
      if (entry.partners.size() != 1)
        fail("b-moved character must have exactly one partner");
      auto psi = entry.partners[0];
      if (mult[0] != 1)
        fail("restriction multiplicity must be 1");
      auto const &other = t_g.values[act.b[chi]];
      for (std::size_t k = 0; k < c; ++k)
        if (restricted[psi][k] != modp::add(t_g.values[chi][k], other[k], p))
          fail("partner does not restrict to chi + chi^b");
      if (eps_twist[psi] != psi)
        fail("partner is not fixed by the sign character");
      if (entry.fhat[0] != fsum || entry.fhat[0] != expect_fhat)
        fail("overgroup indicator does not match F + F#");
      ++rep.two_to_one;
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

std::int64_t ConstraintReport::residual(std::string_view name) const
{
  for (auto const &r : residuals)
    if (r.name == name)
      return r.value;
  throw Error(Errc::InvalidArgument, "no residual named '" + std::string(name) + "'");
}

bool ConstraintReport::ok() const
{
  return std::all_of(residuals.begin(), residuals.end(),
                     [](auto const &r) { return r.value == 0; }) &&
         parity_failures.empty() && k4_isomorphism.value_or(true);
}

ConstraintReport verify_constraints(TypeCensus const &tc, ClassCensus const &cc,
                                    GhatCensus const &gc, std::int64_t sv, std::int64_t sw)
{
  auto N = [&](DysonType t) { return static_cast<std::int64_t>(tc[t]); };
  using enum DysonType;
  std::int64_t const n1 = N(I), n2 = N(II), n3 = N(III), n4 = N(IV), n5 = N(V), n6 = N(VI),
                     n7 = N(VII), n8 = N(VIII), n9 = N(IX), n10 = N(X);
  auto const c1 = static_cast<std::int64_t>(cc.c1), c2a = static_cast<std::int64_t>(cc.c2a),
             c2b = static_cast<std::int64_t>(cc.c2b), c2c = static_cast<std::int64_t>(cc.c2c),
             c4 = static_cast<std::int64_t>(cc.c4);
  auto const nr = static_cast<std::int64_t>(tc.n_real),
             nc = static_cast<std::int64_t>(tc.n_complex),
             nh = static_cast<std::int64_t>(tc.n_quaternionic);
  auto const hr = static_cast<std::int64_t>(gc.n_real),
             hc = static_cast<std::int64_t>(gc.n_complex),
             hh = static_cast<std::int64_t>(gc.n_quaternionic),
             c2hat = static_cast<std::int64_t>(gc.c2hat);

  ConstraintReport rep;
  auto add = [&](std::string name, std::int64_t v) { rep.residuals.push_back({std::move(name), v}); };

  // real / complex / quaternionic split of the ten types
  add("N_R = N_I+N_II+N_III", nr - (n1 + n2 + n3));
  add("N_C = N_IV+N_V+N_VI+N_VII", nc - (n4 + n5 + n6 + n7));
  add("N_H = N_VIII+N_IX+N_X", nh - (n8 + n9 + n10));

  // real and non-real classes
  add("N_I+N_II+N_III+N_VIII+N_IX+N_X = C_1+C_2a", n1 + n2 + n3 + n8 + n9 + n10 - (c1 + c2a));
  add("N_IV+N_V+N_VI+N_VII = C_2b+C_2c+C_4", n4 + n5 + n6 + n7 - (c2b + c2c + c4));
  add("N_III+N_IV+N_VII+N_X = C_2a+C_2b+C_4", n3 + n4 + n7 + n10 - (c2a + c2b + c4));

  // orbit types of the K4 action
  add("N_VII = C_4", n7 - c4);
  add("N_III+N_X = C_2a", n3 + n10 - c2a);
  add("N_IV = C_2b", n4 - c2b);
  add("N_V+N_VI = C_2c", n5 + n6 - c2c);
  add("N_I+N_II+N_VIII+N_IX = C_1", n1 + n2 + n8 + n9 - c1);

  // induction to the overgroup; halves cleared by 2
  add("2N_I+N_III/2+N_V/2 = Nhat_R", 4 * n1 + n3 + n5 - 2 * hr);
  add("2N_II+2N_IV+N_VII/2+2N_IX = Nhat_C", 4 * n2 + 4 * n4 + n7 + 4 * n9 - 2 * hc);
  add("N_VI/2+2N_VIII+N_X/2 = Nhat_H", n6 + 4 * n8 + n10 - 2 * hh);
  add("4N_I+N_III+N_V = 2Nhat_R", 4 * n1 + n3 + n5 - 2 * hr);
  // quarters cleared by 4
  add("N_II+N_IX = Chat_2/2-C_2b-C_4/4", 4 * (n2 + n9) - (2 * c2hat - 4 * c2b - c4));

  // positive entries of the normalized indicator multisets
  add("N_I+N_V+N_IX = S_v", n1 + n5 + n9 - sv);
  add("N_I+N_IX = S_w", n1 + n9 - sw);

  auto even = [&](std::string const &name, std::int64_t v) {
    if (v % 2 != 0)
      rep.parity_failures.push_back(name + " is odd");
  };
  auto quad = [&](std::string const &name, std::int64_t v) {
    if (v % 4 != 0)
      rep.parity_failures.push_back(name + " is not divisible by 4");
  };
  even("N_III", n3);
  even("N_IV", n4);
  even("N_V", n5);
  even("N_VI", n6);
  even("N_X", n10);
  quad("N_VII", n7);
  even("C_2a", c2a);
  even("C_2b", c2b);
  even("C_2c", c2c);
  quad("C_4", c4);
  even("Chat_2", c2hat);
  if (!gc.complex_matches_classes())
    rep.parity_failures.push_back("Nhat_C differs from Chat_2");
  return rep;
}

std::array<std::uint64_t, 5> orbit_type_census(K4Action const &act)
{
  std::array<std::uint64_t, 5> out{};
  for (std::size_t i = 0; i < act.size(); ++i)
    ++out[static_cast<std::size_t>(stabilizer_of(act, i))];
  return out;
}

bool k4_isomorphism_check(K4Action const &on_characters, K4Action const &on_classes)
{ return orbit_type_census(on_characters) == orbit_type_census(on_classes); }

} // namespace tenfold
