#include <gtest/gtest.h>

#include "support.hpp"
#include "tenfold/analysis.hpp"
#include "tenfold/error.hpp"

using namespace tenfold;
namespace mp = tenfold::modp;
using T = DysonType;

namespace
{

std::size_t nontrivial_class(ClassData const &cd, CayleyGroup const &g, std::uint64_t order)
{
  for (std::size_t k = 0; k < cd.count(); ++k)
    if (g.element_order(cd.representative(k)) == order)
      return k;
  ADD_FAILURE() << "no class of order " << order;
  return 0;
}

bool is_real_row(support::Loaded const &L, std::size_t chi)
{
  for (std::size_t k = 0; k < L.cd.count(); ++k)
    if (L.t.values[chi][k] != L.t.values[chi][L.cd.inverse_class[k]])
      return false;
  return true;
}

} // namespace

TEST(TypeTable, Rows)
{
  struct Row
  {
    T t;
    int f, fs;
    bool fixed;
    Stabilizer stab;
    int fhat;
    char const *label;
  };
  Row const rows[] = {
    {T::I, 1, 1, true, Stabilizer::Full, 1, "RR"},
    {T::II, 1, -1, true, Stabilizer::Full, 0, "QR"},
    {T::III, 1, 0, false, Stabilizer::A, 1, "CR"},
    {T::IV, 0, 0, true, Stabilizer::B, 0, "CC2"},
    {T::V, 0, 1, false, Stabilizer::C, 1, "RC"},
    {T::VI, 0, -1, false, Stabilizer::C, -1, "QC"},
    {T::VII, 0, 0, false, Stabilizer::Trivial, 0, "CC1"},
    {T::VIII, -1, -1, true, Stabilizer::Full, -1, "QQ"},
    {T::IX, -1, 1, true, Stabilizer::Full, 0, "RQ"},
    {T::X, -1, 0, false, Stabilizer::A, -1, "CQ"},
  };
  for (auto const &r : rows) {
    SCOPED_TRACE(roman(r.t));
    auto const &tr = type_row(r.t);
    EXPECT_EQ(tr.f, r.f);
    EXPECT_EQ(tr.fsharp, r.fs);
    EXPECT_EQ(tr.b_fixed, r.fixed);
    EXPECT_EQ(tr.stab, r.stab);
    EXPECT_EQ(tr.fhat, r.fhat);
    EXPECT_EQ(dyson_label(r.t), r.label);
    EXPECT_EQ(classify({r.f, r.fs}, r.fixed), r.t);
    EXPECT_EQ(classify({r.f, r.fs}, r.stab), r.t);
  }
  EXPECT_EQ(classify({0, 0}, true), T::IV);
  EXPECT_EQ(classify({0, 0}, false), T::VII);
  EXPECT_EQ(classify({-1, 0}, false), T::X);
}

TEST(TypeTable, StabilizerMismatch)
{
  try {
    classify(IndicatorPair{1, 1}, Stabilizer::C);
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), Errc::StabilizerMismatch);
  }
}

TEST(K4Classes, RunningExample)
{
  auto L = support::load("cyclic-in-dihedral:3");
  auto act = k4_on_classes(L.rp, L.cd);
  ASSERT_TRUE(act.is_valid());
  ASSERT_EQ(act.size(), 3u);
  std::size_t one = L.cd.class_of[L.rp.g().identity()];
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(act.c[k], k);
    if (k == one) {
      EXPECT_EQ(act.a[k], k);
      EXPECT_EQ(act.b[k], k);
    } else {
      EXPECT_NE(act.a[k], k);
      EXPECT_EQ(act.b[k], act.a[k]);
    }
  }
  EXPECT_EQ(class_census(act), (ClassCensus{1, 0, 0, 2, 0}));
}

TEST(K4Classes, TrivialStructureOnFive)
{
  auto L = support::load("trivial:C5");
  auto act = k4_on_classes(L.rp, L.cd);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(act.b[k], k);
    EXPECT_EQ(act.a[k] == k, L.cd.representative(k) == L.rp.g().identity());
  }
  EXPECT_EQ(class_census(act), (ClassCensus{1, 0, 4, 0, 0}));
}

TEST(K4Classes, CyclicFourInQuaternions)
{
  auto L = support::load("c4-in-q8");
  auto act = k4_on_classes(L.rp, L.cd);
  auto i = nontrivial_class(L.cd, L.rp.g(), 4);
  EXPECT_EQ(act.a[i], act.b[i]);
  EXPECT_NE(act.a[i], i);
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(act.c[k], k);
  EXPECT_EQ(class_census(act), (ClassCensus{2, 0, 0, 2, 0}));
}

// C_1 + C_2a counts inverse-closed classes; C_1 counts those also fixed by
// the twist, computed here element by element.
TEST(K4Classes, CensusOracle)
{
  for (auto const &key : support::small_keys()) {
    SCOPED_TRACE(key);
    auto L = support::load(key);
    auto const &g = L.rp.g();
    auto const &gh = L.rp.ghat();
    Elem x = L.rp.default_twist();
    std::uint64_t real = 0, fixed_both = 0, fixed_b = 0;
    for (std::size_t k = 0; k < L.cd.count(); ++k) {
      Elem r = L.cd.representative(k);
      bool inv = L.cd.class_of[g.inv(r)] == k;
      bool tw = L.cd.class_of[L.rp.local(gh.conj(x, L.rp.embed(r)))] == k;
      real += inv;
      fixed_both += inv && tw;
      fixed_b += tw && !inv;
    }
    auto cc = class_census(k4_on_classes(L.rp, L.cd));
    EXPECT_EQ(cc.c1 + cc.c2a, real);
    EXPECT_EQ(cc.c1, fixed_both);
    EXPECT_EQ(cc.c2b, fixed_b);
    EXPECT_EQ(cc.total(), L.cd.count());
    EXPECT_EQ(cc.c2a % 2, 0u);
    EXPECT_EQ(cc.c2b % 2, 0u);
    EXPECT_EQ(cc.c2c % 2, 0u);
    EXPECT_EQ(cc.c4 % 4, 0u);
  }
}

TEST(Indicators, RunningExample)
{
  auto L = support::load("cyclic-in-dihedral:3");
  auto ind = fs_indicators(L.t, L.rp);
  ASSERT_EQ(ind.size(), 3u);
  EXPECT_EQ(ind[0], (IndicatorPair{1, 1})); // trivial character sorts first
  EXPECT_EQ(ind[1], (IndicatorPair{0, 1}));
  EXPECT_EQ(ind[2], (IndicatorPair{0, 1}));
}

TEST(Indicators, CyclicFourInQuaternions)
{
  auto L = support::load("c4-in-q8");
  auto ind = fs_indicators(L.t, L.rp);
  for (std::size_t chi = 0; chi < L.t.size(); ++chi)
    EXPECT_EQ(ind[chi], is_real_row(L, chi) ? (IndicatorPair{1, 1}) : (IndicatorPair{0, -1}));
}

// sum_chi F#(chi) chi(g) = #{z in the other coset : z^2 = g}
TEST(Indicators, TwistedRootCountOracle)
{
  for (auto const &key : support::small_keys()) {
    SCOPED_TRACE(key);
    auto L = support::load(key);
    auto ind = fs_indicators(L.t, L.rp);
    std::uint64_t p = L.ctx.p;
    std::vector<std::uint64_t> roots(L.rp.g().order(), 0), roots_g(L.rp.g().order(), 0);
    for (auto z : L.rp.gsharp_indices())
      ++roots[L.rp.local(L.rp.ghat().square(z))];
    for (auto y : L.rp.g_indices())
      ++roots_g[L.rp.local(L.rp.ghat().square(y))];
    for (Elem y = 0; y < L.rp.g().order(); ++y) {
      std::uint64_t s = 0, sg = 0;
      for (std::size_t chi = 0; chi < L.t.size(); ++chi) {
        auto v = L.t.values[chi][L.cd.class_of[y]];
        s = mp::add(s, mp::mul(mp::reduce(ind[chi].fsharp, p), v, p), p);
        sg = mp::add(sg, mp::mul(mp::reduce(ind[chi].f, p), v, p), p);
      }
      EXPECT_EQ(s, roots[y] % p);
      EXPECT_EQ(sg, roots_g[y] % p);
    }
  }
}

TEST(K4Characters, RunningExample)
{
  auto L = support::load("cyclic-in-dihedral:3");
  auto act = k4_on_characters(L.t, L.rp);
  ASSERT_TRUE(act.is_valid());
  EXPECT_EQ(act.a[1], 2u);
  EXPECT_EQ(act.b[1], 2u);
  EXPECT_EQ(act.c[1], 1u);
  EXPECT_EQ(stabilizer_of(act, 1), Stabilizer::C);
  EXPECT_EQ(stabilizer_of(act, 0), Stabilizer::Full);
}

TEST(K4Characters, CyclicFourInQuaternions)
{
  auto L = support::load("c4-in-q8");
  auto act = k4_on_characters(L.t, L.rp);
  for (std::size_t chi = 0; chi < L.t.size(); ++chi)
    EXPECT_EQ(stabilizer_of(act, chi), is_real_row(L, chi) ? Stabilizer::Full : Stabilizer::C);
}

// The twist image evaluated element by element.
TEST(K4Characters, TwistOracle)
{
  for (auto const &key : support::small_keys()) {
    SCOPED_TRACE(key);
    auto L = support::load(key);
    auto act = k4_on_characters(L.t, L.rp);
    EXPECT_TRUE(act.is_valid());
    auto const &gh = L.rp.ghat();
    Elem x = L.rp.default_twist();
    for (std::size_t chi = 0; chi < L.t.size(); ++chi)
      for (Elem y = 0; y < L.rp.g().order(); ++y) {
        auto twisted = L.rp.local(gh.conj(x, L.rp.embed(y)));
        EXPECT_EQ(L.t.values[act.b[chi]][L.cd.class_of[y]],
                  L.t.values[chi][L.cd.class_of[twisted]]);
        EXPECT_EQ(L.t.values[act.a[chi]][L.cd.class_of[y]],
                  L.t.values[chi][L.cd.class_of[L.rp.g().inv(y)]]);
      }
  }
}

TEST(TypeCensus, Examples)
{
  auto a = dyson_census(support::load("cyclic-in-dihedral:3").t, resolve("cyclic-in-dihedral:3"));
  EXPECT_EQ(a[T::I], 1u);
  EXPECT_EQ(a[T::V], 2u);
  EXPECT_EQ(a.total(), 3u);
  EXPECT_EQ(a.degrees(T::I), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(a.degrees(T::V), (std::vector<std::uint64_t>{1, 1}));

  auto L = support::load("c4-in-q8");
  auto b = dyson_census(L.t, L.rp);
  EXPECT_EQ(b[T::I], 2u);
  EXPECT_EQ(b[T::VI], 2u);
  EXPECT_EQ(b.total(), 4u);

  auto Q = support::load("trivial:Q8");
  auto c = dyson_census(Q.t, Q.rp);
  EXPECT_EQ(c[T::I], 4u);
  EXPECT_EQ(c[T::VIII], 1u);
  EXPECT_EQ(c.total(), 5u);
  EXPECT_EQ(c.degrees(T::VIII), (std::vector<std::uint64_t>{2}));
}

TEST(TypeCensus, OrbitsShareTypeAndDegree)
{
  for (auto const &key : support::small_keys()) {
    SCOPED_TRACE(key);
    auto L = support::load(key);
    auto tc = dyson_census(L.t, L.rp);
    auto act = k4_on_characters(L.t, L.rp);
    for (std::size_t chi = 0; chi < L.t.size(); ++chi)
      for (auto img : {act.a[chi], act.b[chi], act.c[chi]}) {
        EXPECT_EQ(tc.types[img], tc.types[chi]);
        EXPECT_EQ(L.t.degrees[img], L.t.degrees[chi]);
      }
    for (auto t : {T::III, T::IV, T::V, T::VI, T::X})
      EXPECT_EQ(tc[t] % 2, 0u);
    EXPECT_EQ(tc[T::VII] % 4, 0u);
  }
}

TEST(GhatCensus, Examples)
{
  auto s3 = resolve("cyclic-in-dihedral:3");
  auto g1 = ghat_census(s3, choose_prime(s3.ghat()));
  EXPECT_EQ(g1.n_real, 3u);
  EXPECT_EQ(g1.n_complex, 0u);
  EXPECT_EQ(g1.n_quaternionic, 0u);
  EXPECT_EQ(g1.c2hat, 0u);

  auto q8 = resolve("c4-in-q8");
  auto g2 = ghat_census(q8, choose_prime(q8.ghat()));
  EXPECT_EQ(g2.n_real, 4u);
  EXPECT_EQ(g2.n_complex, 0u);
  EXPECT_EQ(g2.n_quaternionic, 1u);

  auto c4 = resolve("cyclic-in-cyclic:2");
  auto g3 = ghat_census(c4, choose_prime(c4.ghat()));
  EXPECT_EQ(g3.n_real, 2u);
  EXPECT_EQ(g3.n_complex, 2u);
  EXPECT_EQ(g3.c2hat, 2u);
  EXPECT_TRUE(g3.complex_matches_classes());
}

TEST(Induction, RunningExample)
{
  auto rp = resolve("cyclic-in-dihedral:3");
  auto L = support::load(rp);
  auto cdh = conjugacy_classes(rp.ghat());
  auto th = dixon_character_table(rp.ghat(), cdh, L.ctx);
  auto rep = induction_correspondence(L.t, th, rp);
  EXPECT_EQ(rep.one_to_two, 1u);
  EXPECT_EQ(rep.two_to_one, 2u);
  ASSERT_EQ(rep.entries.size(), 3u);
  EXPECT_TRUE(rep.entries[0].b_fixed);
  EXPECT_EQ(rep.entries[0].partners.size(), 2u);
  EXPECT_EQ(rep.entries[0].fhat, (std::vector<int>{1, 1}));
  for (std::size_t chi : {1, 2}) {
    EXPECT_FALSE(rep.entries[chi].b_fixed);
    ASSERT_EQ(rep.entries[chi].partners.size(), 1u);
    EXPECT_EQ(th.degrees[rep.entries[chi].partners[0]], 2u);
    EXPECT_EQ(rep.entries[chi].fhat, (std::vector<int>{1}));
  }
}

TEST(Constraints, RunningExampleAndPerturbation)
{
  auto a = analyze(resolve("cyclic-in-dihedral:3"), "cyclic-in-dihedral:3");
  auto rep = verify_constraints(a.types, a.class_census, a.ghat, 3, 1);
  EXPECT_EQ(rep.residuals.size(), 18u);
  for (auto const &r : rep.residuals)
    EXPECT_EQ(r.value, 0) << r.name;
  EXPECT_TRUE(rep.parity_failures.empty());

  auto tc = a.types;
  tc[T::V] -= 1;
  auto bad = verify_constraints(tc, a.class_census, a.ghat, 3, 1);
  EXPECT_EQ(bad.residual("N_V+N_VI = C_2c"), -1);
  EXPECT_EQ(bad.residual("4N_I+N_III+N_V = 2Nhat_R"), -1);
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.parity_failures.empty());
}

TEST(Constraints, ParityOfOvergroupClasses)
{
  auto a = analyze(resolve("cyclic-in-cyclic:2"), "cyclic-in-cyclic:2");
  auto gc = a.ghat;
  gc.c2hat += 1;
  auto rep = verify_constraints(a.types, a.class_census, gc, 1, 1);
  EXPECT_FALSE(rep.parity_failures.empty());
}

TEST(Constraints, TrivialStructureDegenerates)
{
  for (auto const &key : {"trivial:C4", "trivial:Q8", "trivial:A4", "trivial:D5"}) {
    SCOPED_TRACE(key);
    auto a = analyze(resolve(key), key);
    for (auto t : {T::II, T::III, T::V, T::VI, T::VII, T::IX, T::X})
      EXPECT_EQ(a.types[t], 0u);
    EXPECT_TRUE(a.constraints.ok());
  }
}

// The headline property: every relation holds on every catalog pair.
TEST(Constraints, HoldOnCatalog)
{
  for (auto const &key : standard_instances()) {
    SCOPED_TRACE(key);
    auto a = analyze(resolve(key), key);
    for (auto const &r : a.constraints.residuals)
      EXPECT_EQ(r.value, 0) << r.name;
    EXPECT_TRUE(a.constraints.parity_failures.empty());
    EXPECT_TRUE(a.constraints.k4_isomorphism.value_or(false));
    EXPECT_TRUE(a.induction.has_value()) << a.induction_error;
    EXPECT_TRUE(a.ghat.complex_matches_classes());
    auto const &tc = a.types;
    auto const &cc = a.class_census;
    EXPECT_EQ(tc.n_real + tc.n_quaternionic, cc.c1 + cc.c2a);
    EXPECT_EQ(tc.n_complex, cc.c2b + cc.c2c + cc.c4);
  }
}

TEST(K4Isomorphism, Examples)
{
  for (auto const &key : {"cyclic-in-dihedral:3", "c4-in-q8"}) {
    auto L = support::load(key);
    auto on_ch = k4_on_characters(L.t, L.rp);
    auto on_cl = k4_on_classes(L.rp, L.cd);
    EXPECT_TRUE(k4_isomorphism_check(on_ch, on_cl));
    EXPECT_EQ(orbit_type_census(on_ch), orbit_type_census(on_cl));
  }
  auto L = support::load("cyclic-in-dihedral:3");
  auto on_cl = k4_on_classes(L.rp, L.cd);
  auto census = orbit_type_census(on_cl);
  EXPECT_EQ(census[static_cast<std::size_t>(Stabilizer::Full)], 1u);
  EXPECT_EQ(census[static_cast<std::size_t>(Stabilizer::C)], 2u);
}

TEST(TwistChoice, ActionsDoNotDependOnIt)
{
  for (auto const &key : support::small_keys()) {
    SCOPED_TRACE(key);
    auto L = support::load(key);
    EXPECT_TRUE(twist_independence(L.rp, L.cd, L.t));
  }
}
