#include "tenfold/words.hpp"

#include <algorithm>
#include <thread>

#include "tenfold/error.hpp"

namespace tenfold
{

namespace
{

using ClassFn = std::vector<BigInt>;

Rational rpow(Rational const &q, unsigned k)
{
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return out;
}

BigInt ipow(std::uint64_t base, unsigned k)
{
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, k);
  return out;
}

Rational power_sum(RationalMultiset const &x, unsigned k)
{
  Rational s = 0;
  for (auto const &q : x.entries())
    s += rpow(q, k);
  return s;
}

ClassFn class_conv(std::size_t c, std::vector<std::uint64_t> const &coeffs, ClassFn const &f1,
                   ClassFn const &f2)
{
  ClassFn out(c, 0);
  BigInt prod;
  for (std::size_t j = 0; j < c; ++j) {
    if (f1[j] == 0)
      continue;
    for (std::size_t k = 0; k < c; ++k) {
      if (f2[k] == 0)
        continue;
      prod = f1[j] * f2[k];
      std::uint64_t const *row = &coeffs[(j * c + k) * c];
      for (std::size_t l = 0; l < c; ++l)
        if (row[l])
          mpz_addmul_ui(out[l].get_mpz_t(), prod.get_mpz_t(), row[l]);
    }
  }
  return out;
}

ClassFn to_classes(CountFunction const &f, ClassData const &cd)
{
  ClassFn out(cd.count());
  for (std::size_t k = 0; k < cd.count(); ++k)
    out[k] = f.values[cd.representative(k)];
  return out;
}

CountFunction from_classes(ClassFn const &f, ClassData const &cd)
{
  CountFunction out;
  out.values.resize(cd.class_of.size());
  for (std::size_t x = 0; x < out.values.size(); ++x)
    out.values[x] = f[cd.class_of[x]];
  return out;
}

void check_coeffs(ClassData const &cd, std::vector<std::uint64_t> const &coeffs)
{
  std::size_t c = cd.count();
  if (coeffs.size() != c * c * c)
    throw Error(Errc::InvalidArgument, "class coefficients do not match the class data");
}

} // namespace

WordSpec WordSpec::parse(std::string const &text)
{
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::ParseError, "word '" + text + "' lacks a ':'");
  std::string kind = text.substr(0, colon);
  std::string arg = text.substr(colon + 1);
  WordSpec out;
  if (kind == "custom") {
    out.kind = Kind::Custom;
    for (char ch : arg) {
      if (ch == 'y')
        out.custom.push_back(Coset::G);
      else if (ch == 'z')
        out.custom.push_back(Coset::Sharp);
      else
        throw Error(Errc::ParseError, std::string("unknown letter '") + ch + "' in word");
    }
    if (out.custom.empty())
      throw Error(Errc::ParseError, "empty custom word");
    out.count = static_cast<unsigned>(out.custom.size());
    return out;
  }
  if (kind == "v")
    out.kind = Kind::V;
  else if (kind == "w")
    out.kind = Kind::W;
  else
    throw Error(Errc::ParseError, "unknown word family '" + kind + "'");
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(Errc::ParseError, "bad word length '" + arg + "'");
  unsigned long n = std::stoul(arg);
  if (n == 0 || n > 100000)
    throw Error(Errc::InvalidArgument, "word length must be positive");
  out.count = static_cast<unsigned>(n);
  return out;
}

std::vector<Coset> WordSpec::letters() const
{
  switch (kind) {
  case Kind::V:
    return std::vector<Coset>(count, Coset::Sharp);
  case Kind::W: {
    std::vector<Coset> out;
    out.reserve(3 * count);
    for (unsigned i = 0; i < count; ++i)
      out.insert(out.end(), {Coset::G, Coset::G, Coset::Sharp});
    return out;
  }
  case Kind::Custom:
    break;
  }
  return custom;
}

std::string WordSpec::str() const
{
  switch (kind) {
  case Kind::V:
    return "v:" + std::to_string(count);
  case Kind::W:
    return "w:" + std::to_string(count);
  case Kind::Custom:
    break;
  }
  std::string s = "custom:";
  for (auto l : custom)
    s += l == Coset::G ? 'y' : 'z';
  return s;
}

BigInt CountFunction::total() const
{
  BigInt s = 0;
  for (auto const &v : values)
    s += v;
  return s;
}

CountFunction square_counts(RealPair const &rp, Coset coset)
{
  auto const &gh = rp.ghat();
  auto const &dom = coset == Coset::G ? rp.g_indices() : rp.gsharp_indices();
  CountFunction out;
  out.values.assign(rp.g().order(), 0);
  for (auto z : dom)
    ++out.values[rp.local(gh.square(z))];
  return out;
}

CountFunction convolve(CayleyGroup const &g, CountFunction const &f1, CountFunction const &f2)
{
  std::size_t n = g.order();
  CountFunction out;
  out.values.assign(n, 0);
  BigInt prod;
  for (Elem h = 0; h < n; ++h) {
    if (f1.values[h] == 0)
      continue;
    for (Elem k = 0; k < n; ++k) {
      if (f2.values[k] == 0)
        continue;
      prod = f1.values[h] * f2.values[k];
      out.values[g.mul(h, k)] += prod;
    }
  }
  return out;
}

CountFunction theta_convolution(RealPair const &rp, WordSpec const &w, std::uint64_t budget)
{
  auto letters = w.letters();
  std::uint64_t n = rp.g().order();
  if (letters.size() > 1 && n * n * (letters.size() - 1) > budget)
    throw Error(Errc::CapExceeded, "convolution of " + w.str() + " exceeds the work budget");
  auto sq_g = square_counts(rp, Coset::G);
  auto sq_s = square_counts(rp, Coset::Sharp);
  CountFunction acc = letters.front() == Coset::G ? sq_g : sq_s;
  for (std::size_t i = 1; i < letters.size(); ++i)
    acc = convolve(rp.g(), acc, letters[i] == Coset::G ? sq_g : sq_s);
  return acc;
}

CountFunction theta_class_convolution(RealPair const &rp, ClassData const &cd,
                                      std::vector<std::uint64_t> const &coeffs,
                                      WordSpec const &w)
{
  check_coeffs(cd, coeffs);
  auto letters = w.letters();
  auto sq_g = to_classes(square_counts(rp, Coset::G), cd);
  auto sq_s = to_classes(square_counts(rp, Coset::Sharp), cd);
  ClassFn acc = letters.front() == Coset::G ? sq_g : sq_s;
  for (std::size_t i = 1; i < letters.size(); ++i)
    acc = class_conv(cd.count(), coeffs, acc, letters[i] == Coset::G ? sq_g : sq_s);
  return from_classes(acc, cd);
}

CountFunction theta_bruteforce_all(RealPair const &rp, WordSpec const &w, std::uint64_t cap,
                                   unsigned jobs)
{
  auto const &G = rp.g();
  auto letters = w.letters();

  std::vector<std::vector<Elem>> squares(2); // local squares per coset
  for (auto z : rp.g_indices())
    squares[0].push_back(rp.local(rp.ghat().square(z)));
  for (auto z : rp.gsharp_indices())
    squares[1].push_back(rp.local(rp.ghat().square(z)));

  std::uint64_t tuples = 1;
  for (auto l : letters) {
    tuples *= squares[l == Coset::Sharp].size();
    if (tuples > cap)
      throw Error(Errc::CapExceeded, "brute force over " + w.str() + " exceeds the tuple cap");
  }

  std::size_t L = letters.size();
  auto const &first = squares[letters[0] == Coset::Sharp];
  jobs = std::max(1u, jobs);
  std::vector<std::vector<std::uint64_t>> hist(jobs, std::vector<std::uint64_t>(G.order(), 0));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t)
      workers.emplace_back([&, t] {
        auto &h = hist[t];
        std::vector<Elem> prefix(L);
        std::vector<std::size_t> idx(L);
        for (std::size_t i0 = t; i0 < first.size(); i0 += jobs) {
          prefix[0] = first[i0];
          if (L == 1) {
            ++h[prefix[0]];
            continue;
          }
          // odometer over letters 1..L-1
          std::fill(idx.begin(), idx.end(), 0);
          std::size_t depth = 1;
          for (;;) {
            auto const &dom = squares[letters[depth] == Coset::Sharp];
            if (idx[depth] == dom.size()) {
              idx[depth] = 0;
              if (--depth == 0)
                break;
              ++idx[depth];
              continue;
            }
            prefix[depth] = G.mul(prefix[depth - 1], dom[idx[depth]]);
            if (depth + 1 == L) {
              ++h[prefix[depth]];
              ++idx[depth];
            } else {
              ++depth;
            }
          }
        }
      });
  }
  CountFunction out;
  out.values.assign(G.order(), 0);
  for (auto const &h : hist)
    for (std::size_t x = 0; x < h.size(); ++x)
      out.values[x] += static_cast<unsigned long>(h[x]);
  return out;
}

BigInt theta_bruteforce(RealPair const &rp, WordSpec const &w, Elem g, std::uint64_t cap,
                        unsigned jobs)
{
  if (g >= rp.g().order())
    throw Error(Errc::InvalidArgument, "element out of range");
  return theta_bruteforce_all(rp, w, cap, jobs).values[g];
}

IndicatorMultisets build_indicator_multisets(ModCharTable const &t,
                                             std::vector<IndicatorPair> const &indicators)
{
  if (indicators.size() != t.size())
    throw Error(Errc::InvalidArgument, "indicator count does not match the table");
  std::vector<Rational> xv, xw;
  IndicatorMultisets out;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    auto d = static_cast<unsigned long>(t.degrees[chi]);
    auto [f, fs] = indicators[chi];
    Rational a(fs, d), b(f * f * fs, d);
    a.canonicalize();
    b.canonicalize();
    out.xv.positive += a > 0;
    out.xv.negative += a < 0;
    out.xw.positive += b > 0;
    out.xw.negative += b < 0;
    xv.push_back(a);
    xw.push_back(b);
  }
  out.xv.entries = RationalMultiset(std::move(xv));
  out.xw.entries = RationalMultiset(std::move(xw));
  return out;
}

IdentityReport power_sum_identity_check(RealPair const &rp, ClassData const &cd,
                                        std::vector<std::uint64_t> const &coeffs,
                                        IndicatorMultisets const &x, unsigned k_max)
{
  if (k_max == 0)
    throw Error(Errc::InvalidArgument, "k_max must be positive");
  std::uint64_t n = rp.g().order();
  unsigned v_terms = k_max;
  unsigned w_terms = (k_max + 2) / 3;
  auto seq = theta_sequences(rp, cd, coeffs, v_terms, w_terms);

  IdentityReport rep;
  for (unsigned i = 0; i < v_terms; ++i) {
    unsigned m = i + 3;
    Rational predicted = Rational(ipow(n, m - 1)) * power_sum(x.xv.entries, m - 2);
    if (predicted != Rational(seq.v[i]))
      rep.violations.push_back({"v:" + std::to_string(m), m, seq.v[i], predicted});
    ++rep.v_checked;
  }
  for (unsigned i = 0; i < w_terms; ++i) {
    unsigned k = i + 1;
    Rational predicted = Rational(ipow(n, 3 * k - 1)) * power_sum(x.xw.entries, 3 * k - 2);
    if (predicted != Rational(seq.w[i]))
      rep.violations.push_back({"w:" + std::to_string(k), k, seq.w[i], predicted});
    ++rep.w_checked;
  }
  return rep;
}

std::vector<Rational> candidate_values(std::uint64_t group_order)
{
  std::vector<Rational> out;
  for (std::uint64_t d = 1; d <= group_order; ++d)
    if (group_order % d == 0) {
      out.emplace_back(1, static_cast<unsigned long>(d));
      out.emplace_back(-1, static_cast<unsigned long>(d));
    }
  for (auto &q : out)
    q.canonicalize();
  return out;
}

unsigned required_v_terms(std::uint64_t class_count)
{ return static_cast<unsigned>(class_count) + 1; }

unsigned required_w_terms(std::uint64_t group_order)
{ return static_cast<unsigned>(candidate_values(group_order).size()); }

ThetaSequences theta_sequences(RealPair const &rp, ClassData const &cd,
                               std::vector<std::uint64_t> const &coeffs, unsigned v_terms,
                               unsigned w_terms)
{
  check_coeffs(cd, coeffs);
  std::size_t c = cd.count();
  std::size_t one = cd.class_of[rp.g().identity()];
  ThetaSequences seq;
  seq.group_order = rp.g().order();
  seq.class_count = c;

  auto sq_g = to_classes(square_counts(rp, Coset::G), cd);
  auto sq_s = to_classes(square_counts(rp, Coset::Sharp), cd);

  if (v_terms > 0) {
    ClassFn acc = class_conv(c, coeffs, sq_s, sq_s);
    for (unsigned i = 0; i < v_terms; ++i) {
      acc = class_conv(c, coeffs, acc, sq_s);
      seq.v.push_back(acc[one]);
    }
  }
  if (w_terms > 0) {
    ClassFn block = class_conv(c, coeffs, class_conv(c, coeffs, sq_g, sq_g), sq_s);
    ClassFn acc = block;
    seq.w.push_back(acc[one]);
    for (unsigned i = 1; i < w_terms; ++i) {
      acc = class_conv(c, coeffs, acc, block);
      seq.w.push_back(acc[one]);
    }
  }
  return seq;
}

bool same_census(RecoveredCensus const &a, RecoveredCensus const &b)
{
  return a.pos_v == b.pos_v && a.neg_v == b.neg_v && a.s_v == b.s_v && a.s_w == b.s_w &&
         a.pos_w == b.pos_w && a.neg_w == b.neg_w && a.xv == b.xv;
}

RecoveredCensus recover_census_from_theta(ThetaSequences const &seq)
{
  std::uint64_t n = seq.group_order;
  std::uint64_t c = seq.class_count;
  if (n == 0 || c == 0)
    throw Error(Errc::InvalidArgument, "empty group data");
  if (seq.v.size() < c)
    throw Error(Errc::InvalidArgument, "need " + std::to_string(c) + " terms of the v sequence");
  auto cands = candidate_values(n);
  if (seq.w.size() < cands.size())
    throw Error(Errc::InvalidArgument,
                "need " + std::to_string(cands.size()) + " terms of the w sequence");

  RecoveredCensus out;
  std::vector<Rational> pv;
  for (std::size_t i = 0; i < seq.v.size(); ++i) {
    Rational q(seq.v[i], ipow(n, static_cast<unsigned>(i + 2)));
    q.canonicalize();
    pv.push_back(q);
  }
  try {
    out.xv = newton_recover(std::span<Rational const>(pv.data(), c));
  } catch (Error const &e) {
    throw Error(Errc::RecoveryInconsistent, std::string("v sequence: ") + e.what());
  }
  for (std::size_t k = c; k < pv.size(); ++k)
    if (power_sum(out.xv, static_cast<unsigned>(k + 1)) != pv[k])
      throw Error(Errc::RecoveryInconsistent,
                  "v sequence term m = " + std::to_string(k + 3) + " disagrees with the recovered multiset");
  for (auto const &q : out.xv.entries()) {
    if (q == 0)
      continue;
    if (std::find(cands.begin(), cands.end(), q) == cands.end())
      throw Error(Errc::RecoveryInconsistent, "recovered value " + q.get_str() +
                                                " is not of the form +-1/d with d | |G|");
    (q > 0 ? out.pos_v : out.neg_v) += 1;
  }
  out.s_v = out.pos_v;
  out.v_terms_used = static_cast<unsigned>(pv.size());

  std::vector<Rational> pw;
  for (std::size_t i = 0; i < seq.w.size(); ++i) {
    Rational q(seq.w[i], ipow(n, static_cast<unsigned>(3 * i + 2)));
    q.canonicalize();
    pw.push_back(q);
  }
  Multiplicities m;
  try {
    m = recover_multiplicities(cands, c, pw, true);
  } catch (Error const &e) {
    throw Error(Errc::RecoveryInconsistent, std::string("w sequence: ") + e.what());
  }
  for (std::size_t i = 0; i < cands.size(); ++i)
    (cands[i] > 0 ? out.pos_w : out.neg_w) += m.counts[i];
  out.s_w = out.pos_w;
  out.w_terms_used = static_cast<unsigned>(pw.size());
  return out;
}

RecoveredCensus census_from_types(TypeCensus const &tc, IndicatorMultisets const &x)
{
  using T = DysonType;
  RecoveredCensus out;
  out.pos_v = tc[T::I] + tc[T::V] + tc[T::IX];
  out.neg_v = tc[T::II] + tc[T::VI] + tc[T::VIII];
  out.s_v = x.xv.positive;
  out.s_w = x.xw.positive;
  out.pos_w = tc[T::I] + tc[T::IX];
  out.neg_w = tc[T::II] + tc[T::VIII];
  out.xv = x.xv.entries;
  return out;
}

} // namespace tenfold
