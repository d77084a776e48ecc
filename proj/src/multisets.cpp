#include "tenfold/multisets.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

#include "tenfold/error.hpp"

namespace tenfold
{

namespace
{

Rational rpow(Rational const &q, unsigned k)
{
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

// Prime-power factorization by trial division; a cofactor that survives the
// trial bound is kept as a single factor.
std::vector<std::pair<BigInt, unsigned>> factor(BigInt n)
{
  std::vector<std::pair<BigInt, unsigned>> out;
  n = abs(n);
  constexpr unsigned long bound = 1'000'000;
  for (unsigned long d = 2; d <= bound && n > 1; ++d) {
    if (BigInt(d) * d > n)
      break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      out.emplace_back(BigInt(d), e);
    }
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> divisors(BigInt const &n)
{
  std::vector<BigInt> out{1};
  for (auto const &[prime, e] : factor(n)) {
    std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Homogenized evaluation: q^deg * f(p/q), coefficients ascending.
BigInt eval_scaled(std::vector<BigInt> const &f, BigInt const &p, BigInt const &q)
{
  BigInt acc = 0;
  BigInt qpow = 1;
  // Horner in p with powers of q attached to lower coefficients
  std::size_t deg = f.size() - 1;
  std::vector<BigInt> qpows(deg + 1);
  qpows[0] = 1;
  for (std::size_t i = 1; i <= deg; ++i)
    qpows[i] = qpows[i - 1] * q;
  for (std::size_t i = f.size(); i-- > 0;)
    acc = acc * p + f[i] * qpows[deg - i];
  (void)qpow;
  return acc;
}

// Divides f by (q t - p), exact; coefficients ascending.
std::vector<BigInt> deflate(std::vector<BigInt> const &f, BigInt const &p, BigInt const &q)
{
  std::size_t n = f.size() - 1;
  std::vector<BigInt> g(n);
  BigInt carry = 0; // g_k for the previous step
  for (std::size_t k = n; k >= 1; --k) {
    BigInt num = f[k] + p * carry;
    if (!mpz_divisible_p(num.get_mpz_t(), q.get_mpz_t()))
      throw Error(Errc::IrrationalRoots, "inexact deflation");
    carry = num / q;
    g[k - 1] = carry;
  }
  return g;
}

} // namespace

RationalMultiset::RationalMultiset(std::vector<Rational> entries)
: entries_(std::move(entries))
{
  for (auto &q : entries_)
    q.canonicalize();
  std::sort(entries_.begin(), entries_.end());
}

std::string to_string(Rational const &q) { return q.get_str(); }

std::string to_string(RationalMultiset const &x)
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i)
    os << (i ? ", " : "") << x.entries()[i].get_str();
  os << "]";
  return os.str();
}

std::vector<Rational> power_sums(RationalMultiset const &x, std::span<unsigned const> ks)
{
  std::vector<Rational> out;
  out.reserve(ks.size());
  for (auto k : ks) {
    if (k == 0)
      throw Error(Errc::InvalidArgument, "power sums start at k = 1");
    Rational s = 0;
    for (auto const &q : x.entries())
      s += rpow(q, k);
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> power_sums(RationalMultiset const &x, unsigned k_max)
{
  std::vector<unsigned> ks(k_max);
  for (unsigned k = 0; k < k_max; ++k)
    ks[k] = k + 1;
  return power_sums(x, ks);
}

RationalMultiset newton_recover(std::span<Rational const> ps)
{
  std::size_t const n = ps.size();
  // elementary symmetric functions via Newton's identities
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * ps[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }

  // prod (t - q_i) = sum_k (-1)^k e_k t^(n-k), scaled to a primitive integer polynomial
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    coeffs[n - k] = k % 2 ? Rational(-e[k]) : e[k];
  BigInt lcm_den = 1;
  for (auto const &c : coeffs)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> f(n + 1);
  BigInt content = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational scaled = coeffs[i] * lcm_den;
    f[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), f[i].get_mpz_t());
  }
  if (content != 0)
    for (auto &x : f)
      x /= content;

  std::vector<Rational> roots;
  while (f.size() > 1 && f.front() == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  while (f.size() > 1) {
    bool found = false;
    auto ps_cands = divisors(f.front());
    auto qs_cands = divisors(f.back());
    for (auto const &q : qs_cands) {
      for (auto const &p0 : ps_cands) {
        for (int sgn : {1, -1}) {
          BigInt p = sgn * p0;
          if (eval_scaled(f, p, q) != 0)
            continue;
          f = deflate(f, p, q);
          Rational r(p, q);
          r.canonicalize();
          roots.push_back(r);
          found = true;
          break;
        }
        if (found)
          break;
      }
      if (found)
        break;
    }
    if (!found)
      throw Error(Errc::IrrationalRoots,
                  "polynomial of degree " + std::to_string(f.size() - 1) +
                    " has no rational root");
  }
  return RationalMultiset(std::move(roots));
}

Multiplicities recover_multiplicities(std::span<Rational const> y, std::uint64_t n,
                                      std::span<Rational const> sums, bool allow_zero)
{
  std::size_t const k = y.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] == 0)
      throw Error(Errc::SingularSystem, "candidate 0 must be handled through allow_zero");
    for (std::size_t j = 0; j < i; ++j)
      if (y[i] == y[j])
        throw Error(Errc::SingularSystem, "duplicate candidate " + y[i].get_str());
  }
  if (sums.size() < k)
    throw Error(Errc::InvalidArgument, "need at least " + std::to_string(k) + " power sums");

  // With u_i = m_i y_i and x_i = y_i^3 the system reads sum_i u_i x_i^r = s_r,
  // r = 0..k-1, a transposed Vandermonde system: u_i = sum_r L_i[r] s_r for the
  // Lagrange basis polynomials L_i of the nodes x.
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i)
    x[i] = rpow(y[i], 3);

  std::vector<Rational> master{1}; // prod (t - x_j), ascending
  for (auto const &xj : x) {
    std::vector<Rational> next(master.size() + 1);
    for (std::size_t d = 0; d < master.size(); ++d) {
      next[d + 1] += master[d];
      next[d] -= xj * master[d];
    }
    master = std::move(next);
  }

  Multiplicities out;
  out.counts.resize(k);
  std::vector<Rational> m(k);
  for (std::size_t i = 0; i < k; ++i) {
    // master / (t - x_i) by synthetic division
    std::vector<Rational> quot(k);
    Rational carry = 0;
    for (std::size_t d = k; d >= 1; --d) {
      carry = master[d] + carry * x[i];
      quot[d - 1] = carry;
    }
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i)
        denom *= x[i] - x[j];
    Rational u = 0;
    for (std::size_t r = 0; r < k; ++r)
      u += quot[r] * sums[r];
    u /= denom;
    m[i] = u / y[i];
    if (m[i].get_den() != 1 || m[i] < 0)
      throw Error(Errc::NotRealizable,
                  "multiplicity of " + y[i].get_str() + " is " + m[i].get_str());
    if (!m[i].get_num().fits_ulong_p())
      throw Error(Errc::NotRealizable, "multiplicity too large");
    out.counts[i] = m[i].get_num().get_ui();
  }

  for (std::size_t r = k; r < sums.size(); ++r) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s += m[i] * rpow(y[i], static_cast<unsigned>(3 * r + 1));
    if (s != sums[r])
      throw Error(Errc::NotRealizable,
                  "power sum at exponent " + std::to_string(3 * r + 1) + " is inconsistent");
  }

  std::uint64_t total = 0;
  for (auto c : out.counts)
    total += c;
  if (allow_zero) {
    if (total > n)
      throw Error(Errc::NotRealizable, "multiplicities exceed the cardinality");
    out.zero = n - total;
  } else if (total != n) {
    throw Error(Errc::NotRealizable, "multiplicities do not add up to the cardinality");
  }
  return out;
}

unsigned exponent_at(ExponentFamily fam, unsigned k)
{ return fam == ExponentFamily::Sparse ? 3 * k - 2 : k; }

ConjectureResult conjecture_search(unsigned n, std::vector<Rational> pool, ExponentFamily fam,
                                   std::uint64_t budget, unsigned jobs)
{
  for (auto &q : pool)
    q.canonicalize();
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty())
    throw Error(Errc::InvalidArgument, "empty pool");

  // size-n multisets as nondecreasing index tuples, lexicographic order
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur(n, 0);
  for (;;) {
    tuples.push_back(cur);
    if (tuples.size() > 10'000'000)
      throw Error(Errc::CapExceeded, "too many multisets");
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == pool.size() - 1)
      --i;
    if (i == 0)
      break;
    ++cur[i - 1];
    for (std::size_t j = i; j < n; ++j)
      cur[j] = cur[i - 1];
  }

  ConjectureResult res;
  std::uint64_t const M = tuples.size();
  res.multisets = M;
  std::uint64_t const total_pairs = M * (M - 1) / 2;
  if (total_pairs > budget)
    throw Error(Errc::CapExceeded, std::to_string(total_pairs) + " pairs exceed budget " +
                                     std::to_string(budget));

  std::vector<unsigned> ks(n);
  for (unsigned k = 1; k <= n; ++k)
    ks[k - 1] = exponent_at(fam, k);
  auto multiset_of = [&](std::size_t t) {
    std::vector<Rational> v;
    for (auto i : tuples[t])
      v.push_back(pool[i]);
    return RationalMultiset(std::move(v));
  };
  std::vector<std::vector<Rational>> sig(M);
  for (std::size_t t = 0; t < M; ++t)
    sig[t] = power_sums(multiset_of(t), ks);

  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  jobs = std::max(1u, jobs);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> best(jobs, {none, none});
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::uint64_t i = w; i < M; i += jobs)
          for (std::uint64_t j = i + 1; j < M; ++j)
            if (sig[i] == sig[j]) {
              best[w] = {i, j};
              return;
            }
      });
  }
  auto hit = *std::min_element(best.begin(), best.end());
  if (hit.first == none) {
    res.pairs_examined = total_pairs;
    return res;
  }
  auto [i, j] = hit;
  // pairs before row i, plus this row up to j
  res.pairs_examined = i * (M - 1) - i * (i - 1) / 2 + (j - i);
  res.counterexample.emplace(multiset_of(i), multiset_of(j));
  return res;
}

} // namespace tenfold
