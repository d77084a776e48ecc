#include <gtest/gtest.h>

#include <random>

#include "tenfold/error.hpp"
#include "tenfold/multisets.hpp"

using namespace tenfold;

namespace
{

RationalMultiset ms(std::vector<Rational> v) { return RationalMultiset(std::move(v)); }

Errc code_of(auto &&fn)
{
  try {
    fn();
  } catch (Error const &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

std::vector<Rational> int_pool(int lo, int hi)
{
  std::vector<Rational> pool;
  for (int v = lo; v <= hi; ++v)
    pool.emplace_back(v);
  return pool;
}

std::vector<Rational> sparse_sums(RationalMultiset const &x, unsigned terms)
{
  std::vector<unsigned> ks;
  for (unsigned k = 1; k <= terms; ++k)
    ks.push_back(3 * k - 2);
  return power_sums(x, ks);
}

} // namespace

TEST(Multiset, SortedOnConstruction)
{
  auto x = ms({3, Rational(-1, 2), 0, 3});
  EXPECT_EQ(x.entries(), (std::vector<Rational>{Rational(-1, 2), 0, 3, 3}));
  EXPECT_EQ(to_string(x), "[-1/2, 0, 3, 3]");
  EXPECT_EQ(ms({1, 2}), ms({2, 1}));
}

TEST(PowerSums, Examples)
{
  EXPECT_EQ(power_sums(ms({2, 3}), 2), (std::vector<Rational>{5, 13}));
  EXPECT_EQ(power_sums(ms({Rational(1, 2), -1}), 3),
            (std::vector<Rational>{Rational(-1, 2), Rational(5, 4), Rational(-7, 8)}));
  std::vector<unsigned> ks{1, 4};
  EXPECT_EQ(power_sums(ms({-1, 2}), ks), (std::vector<Rational>{1, 17}));
}

TEST(Newton, Examples)
{
  std::vector<Rational> a{5, 13};
  EXPECT_EQ(newton_recover(a), ms({2, 3}));
  std::vector<Rational> b{0, 4, 0, 4};
  EXPECT_EQ(newton_recover(b), ms({1, 1, -1, -1}));
  std::vector<Rational> c{0, 0, 0};
  EXPECT_EQ(newton_recover(c), ms({0, 0, 0}));
  std::vector<Rational> irrational{0, 4};
  EXPECT_EQ(code_of([&] { newton_recover(irrational); }), Errc::IrrationalRoots);
}

TEST(Newton, RandomRoundTrips)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6), len(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      v.push_back(q);
    }
    auto x = ms(v);
    auto sums = power_sums(x, static_cast<unsigned>(n));
    EXPECT_EQ(newton_recover(sums), x) << to_string(x);
  }
}

TEST(Multiplicities, Examples)
{
  std::vector<Rational> y{1, -1};
  std::vector<Rational> sums{1, 3};
  auto m = recover_multiplicities(y, 3, sums, true);
  EXPECT_EQ(m.counts, (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(m.zero, 0u);

  std::vector<Rational> yq{1, Rational(-1, 2)};
  std::vector<Rational> sq{Rational(7, 2), Rational(65, 16)};
  auto mq = recover_multiplicities(yq, 5, sq, false);
  EXPECT_EQ(mq.counts, (std::vector<std::uint64_t>{4, 1}));
  EXPECT_FALSE(mq.zero.has_value());
}

TEST(Multiplicities, Rejections)
{
  std::vector<Rational> dup{1, 1};
  std::vector<Rational> with_zero{0, 1};
  std::vector<Rational> two{1, 2};
  EXPECT_EQ(code_of([&] { recover_multiplicities(dup, 2, two, true); }), Errc::SingularSystem);
  EXPECT_EQ(code_of([&] { recover_multiplicities(with_zero, 2, two, true); }),
            Errc::SingularSystem);

  std::vector<Rational> y{1, -1};
  std::vector<Rational> frac{Rational(1, 2), 1};
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 3, frac, true); }), Errc::NotRealizable);
  std::vector<Rational> negative{3, 1};
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 3, negative, true); }), Errc::NotRealizable);
  std::vector<Rational> sums{1, 3};
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 2, sums, true); }), Errc::NotRealizable);
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 4, sums, false); }), Errc::NotRealizable);
  // a trailing consistency term
  std::vector<Rational> extra{1, 3, 2};
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 3, extra, true); }), Errc::NotRealizable);
  std::vector<Rational> one{1};
  EXPECT_EQ(code_of([&] { recover_multiplicities(y, 3, one, true); }), Errc::InvalidArgument);
}

// Random multisets over candidate values are recovered from 3k-2 power sums.
TEST(Multiplicities, RandomRoundTrips)
{
  std::vector<Rational> y;
  for (int d : {1, 2, 3, 4, 6, 12}) {
    y.emplace_back(1, d);
    y.emplace_back(-1, d);
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> count(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v;
    std::vector<std::uint64_t> expected;
    for (auto const &q : y) {
      int c = count(rng);
      expected.push_back(static_cast<std::uint64_t>(c));
      for (int i = 0; i < c; ++i)
        v.push_back(q);
    }
    int zeros = count(rng);
    for (int i = 0; i < zeros; ++i)
      v.push_back(0);
    auto sums = sparse_sums(ms(v), static_cast<unsigned>(y.size()) + 1);
    auto m = recover_multiplicities(y, v.size(), sums, true);
    EXPECT_EQ(m.counts, expected);
    EXPECT_EQ(m.zero, static_cast<std::uint64_t>(zeros));
  }
}

TEST(Conjecture, SmallCases)
{
  auto r1 = conjecture_search(1, int_pool(-3, 3));
  EXPECT_FALSE(r1.counterexample.has_value());
  EXPECT_EQ(r1.multisets, 7u);
  EXPECT_EQ(r1.pairs_examined, 21u);

  auto r2 = conjecture_search(2, int_pool(-2, 2));
  EXPECT_FALSE(r2.counterexample.has_value());
  EXPECT_EQ(r2.multisets, 15u);
  EXPECT_EQ(r2.pairs_examined, 105u);
}

// With exponents 1..n a size-n multiset is determined by its power sums.
TEST(Conjecture, DenseFamilyHasNoCollisions)
{
  for (unsigned n = 1; n <= 3; ++n) {
    auto r = conjecture_search(n, int_pool(-3, 3), ExponentFamily::Dense);
    EXPECT_FALSE(r.counterexample.has_value()) << n;
    EXPECT_EQ(r.pairs_examined, r.multisets * (r.multisets - 1) / 2);
  }
}

TEST(Conjecture, ReportedPairsCollide)
{
  std::vector<Rational> pool = int_pool(-4, 4);
  for (int d : {2, 3}) {
    pool.emplace_back(1, d);
    pool.emplace_back(-1, d);
  }
  for (unsigned n = 2; n <= 3; ++n) {
    auto r = conjecture_search(n, pool, ExponentFamily::Sparse, 10'000'000, 4);
    EXPECT_EQ(conjecture_search(n, pool, ExponentFamily::Sparse, 10'000'000, 1).counterexample,
              r.counterexample);
    if (r.counterexample) {
      auto const &[a, b] = *r.counterexample;
      EXPECT_NE(a, b);
      EXPECT_EQ(a.size(), n);
      EXPECT_EQ(sparse_sums(a, n), sparse_sums(b, n));
    }
  }
}

TEST(Conjecture, Budget)
{
  EXPECT_EQ(code_of([] { conjecture_search(3, int_pool(-5, 5), ExponentFamily::Sparse, 100); }),
            Errc::CapExceeded);
  EXPECT_EQ(exponent_at(ExponentFamily::Sparse, 3), 7u);
  EXPECT_EQ(exponent_at(ExponentFamily::Dense, 3), 3u);
}
