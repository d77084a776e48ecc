#include "tenfold/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tenfold/error.hpp"
#include "tenfold/modp.hpp"

namespace tenfold
{

namespace
{

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool has_order(std::uint64_t z, std::uint64_t e, std::uint64_t p)
{
  if (modp::pow(z, e, p) != 1)
    return false;
  for (auto q : prime_factors(e))
    if (modp::pow(z, e / q, p) == 1)
      return false;
  return true;
}

std::size_t identity_class(ClassData const &cd, Elem identity)
{ return cd.class_of[identity]; }

// Row-reduces `vecs` in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix &vecs, std::uint64_t p)
{
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::size_t cols = vecs.empty() ? 0 : vecs.front().size();
  for (std::size_t col = 0; col < cols && rank < vecs.size(); ++col) {
    std::size_t r = rank;
    while (r < vecs.size() && vecs[r][col] == 0)
      ++r;
    if (r == vecs.size())
      continue;
    std::swap(vecs[r], vecs[rank]);
    auto scale = modp::inv(vecs[rank][col], p);
    for (auto &x : vecs[rank])
      x = modp::mul(x, scale, p);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == rank || vecs[i][col] == 0)
        continue;
      auto f = vecs[i][col];
      for (std::size_t k = 0; k < cols; ++k)
        vecs[i][k] = modp::sub(vecs[i][k], modp::mul(f, vecs[rank][k], p), p);
    }
    pivots.push_back(col);
    ++rank;
  }
  vecs.resize(rank);
  return pivots;
}

// Basis of {x : M x = 0} for a square matrix M.
Matrix nullspace(Matrix m, std::uint64_t p)
{
  std::size_t n = m.size();
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = modp::neg(m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients in
// ascending degree, monic.
Row charpoly(Matrix h, std::uint64_t p)
{
  std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto &row : h)
        std::swap(row[i], row[m]);
    }
    auto tinv = modp::inv(h[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      auto u = modp::mul(h[i][m - 1], tinv, p);
      if (u == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = modp::sub(h[i][j], modp::mul(u, h[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j)
        h[j][m] = modp::add(h[j][m], modp::mul(u, h[j][i], p), p);
    }
  }

  std::vector<Row> polys{Row{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    Row next(m + 1, 0);
    auto const &prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = modp::add(next[k + 1], prev[k], p);
      next[k] = modp::sub(next[k], modp::mul(h[m - 1][m - 1], prev[k], p), p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = modp::mul(t, h[m - i][m - i - 1], p);
      auto f = modp::mul(t, h[m - i - 1][m - 1], p);
      auto const &q = polys[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k)
        next[k] = modp::sub(next[k], modp::mul(f, q[k], p), p);
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::vector<std::uint64_t> roots_mod_p(Row const &poly, std::uint64_t p)
{
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;)
      acc = modp::add(modp::mul(acc, x, p), poly[k], p);
    if (acc == 0)
      roots.push_back(x);
  }
  return roots;
}

// Splits an A-invariant subspace (rows in reduced echelon form) into the
// eigenspaces of A restricted to it. Returns empty if the pieces do not
// span the whole subspace.
std::vector<Matrix> split(Matrix const &space, Matrix const &a, std::uint64_t p)
{
  std::size_t d = space.size();
  std::size_t c = a.size();
  std::vector<std::size_t> pivots;
  for (auto const &v : space)
    pivots.push_back(static_cast<std::size_t>(
      std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; }) - v.begin()));

  // restriction R with A b_i = sum_j R[j][i] b_j
  Matrix r(d, Row(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t acc = 0;
      auto const &arow = a[pivots[j]];
      for (std::size_t k = 0; k < c; ++k)
        if (space[i][k])
          acc = modp::add(acc, modp::mul(arow[k], space[i][k], p), p);
      r[j][i] = acc;
    }
  }

  std::vector<Matrix> pieces;
  std::size_t total = 0;
  for (auto lambda : roots_mod_p(charpoly(r, p), p)) {
    Matrix shifted = r;
    for (std::size_t i = 0; i < d; ++i)
      shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
    Matrix piece;
    for (auto const &coeffs : nullspace(shifted, p)) {
      Row v(c, 0);
      for (std::size_t i = 0; i < d; ++i)
        if (coeffs[i])
          for (std::size_t k = 0; k < c; ++k)
            v[k] = modp::add(v[k], modp::mul(coeffs[i], space[i][k], p), p);
      piece.push_back(std::move(v));
    }
    rref(piece, p);
    total += piece.size();
    pieces.push_back(std::move(piece));
  }
  if (total != d)
    return {};
  return pieces;
}

} // namespace

bool PrimeContext::valid_for(CayleyGroup const &g) const
{
  return modp::is_prime(p) && e % g.exponent() == 0 && (p - 1) % e == 0 &&
         p > 2 * g.order() && has_order(zeta, e, p);
}

PrimeContext choose_prime(std::uint64_t order, std::uint64_t exponent)
{
  if (exponent == 0)
    throw Error(Errc::InvalidArgument, "exponent must be positive");
  PrimeContext ctx;
  ctx.e = exponent;
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t p = k * exponent + 1;
    if (p > 2 * order && modp::is_prime(p)) {
      ctx.p = p;
      break;
    }
  }
  for (std::uint64_t z = 1; z < ctx.p; ++z)
    if (has_order(z, exponent, ctx.p)) {
      ctx.zeta = z;
      break;
    }
  return ctx;
}

PrimeContext choose_prime(CayleyGroup const &g)
{ return choose_prime(g.order(), g.exponent()); }

void canonicalize(ModCharTable &t)
{
  std::vector<std::size_t> idx(t.values.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) {
    return std::tie(t.degrees[x], t.values[x]) < std::tie(t.degrees[y], t.values[y]);
  });
  decltype(t.values) values;
  decltype(t.degrees) degrees;
  for (auto i : idx) {
    values.push_back(std::move(t.values[i]));
    degrees.push_back(t.degrees[i]);
  }
  t.values = std::move(values);
  t.degrees = std::move(degrees);
}

ModCharTable dixon_character_table(CayleyGroup const &g, ClassData const &cd,
                                   PrimeContext const &ctx, DixonOptions const &opts)
{
  if (!ctx.valid_for(g))
    throw Error(Errc::InvalidArgument, "prime context is not valid for this group");
  std::uint64_t const p = ctx.p;
  std::size_t const c = cd.count();
  auto consts = structure_constants(g, cd, opts.jobs);

  std::mt19937_64 rng(opts.seed);
  Matrix identity(c, Row(c, 0));
  for (std::size_t i = 0; i < c; ++i)
    identity[i][i] = 1;

  std::vector<Matrix> pending{identity};
  std::vector<Row> eigvecs;
  for (int attempt = 0; !pending.empty(); ++attempt) {
    if (attempt > 64)
      throw Error(Errc::SplitFailure, "class algebra did not split after 64 rounds");
    // random combination of class matrices M_j[k][l] = a(j,k,l)
    Matrix a(c, Row(c, 0));
    for (std::size_t j = 0; j < c; ++j) {
      auto coeff = rng() % p;
      if (coeff == 0)
        continue;
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t l = 0; l < c; ++l) {
          auto s = consts[(j * c + k) * c + l];
          if (s)
            a[k][l] = modp::add(a[k][l], modp::mul(coeff, s % p, p), p);
        }
    }
    std::vector<Matrix> next;
    for (auto &space : pending) {
      auto pieces = split(space, a, p);
      if (pieces.empty()) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto &piece : pieces) {
        if (piece.size() == 1)
          eigvecs.push_back(std::move(piece.front()));
        else
          next.push_back(std::move(piece));
      }
    }
    pending = std::move(next);
  }
  if (eigvecs.size() != c)
    throw Error(Errc::SplitFailure, "found " + std::to_string(eigvecs.size()) +
                                      " common eigenvectors, expected " + std::to_string(c));

  std::size_t const one = identity_class(cd, g.identity());
  auto const order = static_cast<std::uint64_t>(g.order());
  auto const order_mod = order % p;
  auto const max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order)) + 1);

  ModCharTable t;
  t.ctx = ctx;
  t.group_order = order;
  t.classes = cd;
  for (auto &v : eigvecs) {
    if (v[one] == 0)
      throw Error(Errc::SplitFailure, "eigenvector vanishes on the identity class");
    auto norm = modp::inv(v[one], p);
    // theta(K) = chi(K)/chi(1) = omega(K)/|K|
    Row theta(c);
    for (std::size_t l = 0; l < c; ++l)
      theta[l] = modp::mul(modp::mul(v[l], norm, p), modp::inv(cd.sizes[l] % p, p), p);
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < c; ++l)
      s = modp::add(s, modp::mul(cd.sizes[l] % p,
                                 modp::mul(theta[l], theta[cd.inverse_class[l]], p), p), p);
    if (s == 0)
      throw Error(Errc::SplitFailure, "degenerate norm for eigenvector");
    auto d2 = modp::mul(order_mod, modp::inv(s, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree && d * d <= order; ++d)
      if ((d * d) % p == d2) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw Error(Errc::SplitFailure, "no integer degree matches the eigenvector norm");
    Row values(c);
    for (std::size_t l = 0; l < c; ++l)
      values[l] = modp::mul(degree % p, theta[l], p);
    t.values.push_back(std::move(values));
    t.degrees.push_back(degree);
  }
  canonicalize(t);
  return t;
}

OrthogonalityReport verify_orthogonality(ModCharTable const &t)
{
  OrthogonalityReport rep;
  auto const p = t.ctx.p;
  auto const &cd = t.classes;
  std::size_t const c = cd.count();
  std::size_t const r = t.values.size();
  auto const order_mod = t.group_order % p;

  bool shape_ok = r == c && t.degrees.size() == r;
  for (auto const &row : t.values)
    shape_ok = shape_ok && row.size() == c;
  if (!shape_ok) {
    rep.rows_ok = rep.columns_ok = rep.degrees_ok = false;
    return rep;
  }

  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x; y < r; ++y) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < c; ++k)
        acc = modp::add(acc, modp::mul(cd.sizes[k] % p,
                                       modp::mul(t.values[x][k],
                                                 t.values[y][cd.inverse_class[k]], p), p), p);
      if (acc != (x == y ? order_mod : 0)) {
        rep.rows_ok = false;
        rep.bad_row_pairs.emplace_back(x, y);
      }
    }

  for (std::size_t k = 0; k < c && rep.columns_ok; ++k)
    for (std::size_t l = 0; l < c; ++l) {
      std::uint64_t acc = 0;
      for (std::size_t x = 0; x < r; ++x)
        acc = modp::add(acc, modp::mul(t.values[x][k], t.values[x][cd.inverse_class[l]], p), p);
      std::uint64_t expect = k == l ? (t.group_order / cd.sizes[k]) % p : 0;
      if (acc != expect) {
        rep.columns_ok = false;
        break;
      }
    }

  // the identity class is the singleton class with every row value = degree
  std::uint64_t sum = 0;
  std::size_t one = c;
  for (std::size_t k = 0; k < c && one == c; ++k)
    if (cd.sizes[k] == 1 && cd.classes[k].size() == 1) {
      bool all = true;
      for (std::size_t x = 0; x < r && all; ++x)
        all = t.values[x][k] == t.degrees[x] % p;
      if (all)
        one = k;
    }
  rep.degrees_ok = one < c;
  for (auto d : t.degrees)
    sum += d * d;
  rep.degrees_ok = rep.degrees_ok && sum == t.group_order;
  return rep;
}

namespace
{

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(std::string const &s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

long long parse_int(std::string const &s, std::string const &context)
{
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (s.empty() || used != s.size())
    throw Error(Errc::ParseError, "bad integer '" + s + "' in " + context);
  return v;
}

// One term: m*z^j, m, z^j or -z^j. Returns (m, j).
std::pair<long long, long long> parse_term(std::string const &term)
{
  auto t = trim(term);
  if (t.empty())
    throw Error(Errc::ParseError, "empty term");
  auto star = t.find('*');
  std::string coeff = star == std::string::npos ? t : trim(t.substr(0, star));
  std::string power = star == std::string::npos ? std::string() : trim(t.substr(star + 1));
  if (star == std::string::npos && t.find('z') != std::string::npos) {
    // bare z^j or -z^j
    auto zpos = t.find('z');
    coeff = trim(t.substr(0, zpos));
    power = trim(t.substr(zpos));
    if (coeff.empty() || coeff == "+")
      coeff = "1";
    else if (coeff == "-")
      coeff = "-1";
  }
  long long m = parse_int(coeff, "term '" + t + "'");
  long long j = 0;
  if (!power.empty()) {
    if (power == "z")
      j = 1;
    else if (power.rfind("z^", 0) == 0)
      j = parse_int(power.substr(2), "term '" + t + "'");
    else
      throw Error(Errc::ParseError, "bad power '" + power + "'");
    if (j < 0)
      throw Error(Errc::ParseError, "negative exponent in '" + t + "'");
  }
  return {m, j};
}

} // namespace

ModCharTable import_table(std::istream &in, CayleyGroup const &g, ClassData const &cd,
                          PrimeContext const &ctx)
{
  if (!ctx.valid_for(g))
    throw Error(Errc::InvalidArgument, "prime context is not valid for this group");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (!t.empty() && t.front() != '#')
      lines.push_back(t);
  }
  if (lines.empty())
    throw Error(Errc::ParseError, "empty character table file");

  std::istringstream header(lines.front());
  std::string tag;
  long long r = 0, e = 0;
  if (!(header >> tag >> r >> e) || tag != "chartab" || r < 1 || e < 1)
    throw Error(Errc::ParseError, "expected header 'chartab r e'");
  if (ctx.e % static_cast<std::uint64_t>(e) != 0)
    throw Error(Errc::ParseError, "root of unity order " + std::to_string(e) +
                                    " does not divide the context exponent");
  if (static_cast<long long>(lines.size()) - 1 != r)
    throw Error(Errc::ParseError, "expected " + std::to_string(r) + " rows");

  auto const p = ctx.p;
  auto const root = modp::pow(ctx.zeta, ctx.e / static_cast<std::uint64_t>(e), p);
  std::size_t const c = cd.count();

  ModCharTable t;
  t.ctx = ctx;
  t.group_order = g.order();
  t.classes = cd;
  std::size_t const one = cd.class_of[g.identity()];
  for (long long i = 0; i < r; ++i) {
    auto cells = split_on(lines[static_cast<std::size_t>(i) + 1], ';');
    if (cells.size() != c)
      throw Error(Errc::ParseError, "row " + std::to_string(i) + " has " +
                                      std::to_string(cells.size()) + " values, expected " +
                                      std::to_string(c));
    Row values(c, 0);
    for (std::size_t k = 0; k < c; ++k)
      for (auto const &term : split_on(cells[k], ',')) {
        auto [m, j] = parse_term(term);
        auto zpow = modp::pow(root, static_cast<std::uint64_t>(j), p);
        values[k] = modp::add(values[k], modp::mul(modp::reduce(m, p), zpow, p), p);
      }
    auto degree = modp::lift(values[one], p);
    if (degree < 1)
      throw Error(Errc::OrthogonalityFailure,
                  "row " + std::to_string(i) + " has non-positive degree");
    t.degrees.push_back(static_cast<std::uint64_t>(degree));
    t.values.push_back(std::move(values));
  }
  canonicalize(t);
  auto rep = verify_orthogonality(t);
  if (!rep.ok())
    throw Error(Errc::OrthogonalityFailure, "imported table fails orthogonality");
  return t;
}

std::vector<std::uint64_t> cyclotomic_lift(ModCharTable const &t, CayleyGroup const &g,
                                           std::size_t chi, std::size_t k)
{
  auto const p = t.ctx.p;
  Elem rep = t.classes.representative(k);
  std::uint64_t s = g.element_order(rep);
  auto zs = modp::pow(t.ctx.zeta, t.ctx.e / s, p);
  auto zs_inv = modp::inv(zs, p);
  auto s_inv = modp::inv(s % p, p);

  Row vals(s);
  Elem x = g.identity();
  for (std::uint64_t i = 0; i < s; ++i) {
    vals[i] = t.values[chi][t.classes.class_of[x]];
    x = g.mul(x, rep);
  }
  std::vector<std::uint64_t> m(s);
  std::uint64_t total = 0;
  for (std::uint64_t j = 0; j < s; ++j) {
    std::uint64_t acc = 0;
    auto step = modp::pow(zs_inv, j, p);
    std::uint64_t w = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
      acc = modp::add(acc, modp::mul(vals[i], w, p), p);
      w = modp::mul(w, step, p);
    }
    acc = modp::mul(acc, s_inv, p);
    if (acc > t.degrees[chi])
      throw Error(Errc::OrthogonalityFailure,
                  "eigenvalue multiplicity out of range for character " + std::to_string(chi));
    m[j] = acc;
    total += acc;
  }
  if (total != t.degrees[chi])
    throw Error(Errc::OrthogonalityFailure,
                "eigenvalue multiplicities do not sum to the degree of character " +
                  std::to_string(chi));
  return m;
}

void export_table(std::ostream &out, ModCharTable const &t, CayleyGroup const &g)
{
  out << "chartab " << t.size() << " " << t.ctx.e << "\n";
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    for (std::size_t k = 0; k < t.classes.count(); ++k) {
      if (k)
        out << ";";
      auto m = cyclotomic_lift(t, g, chi, k);
      auto stride = t.ctx.e / m.size();
      bool first = true;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0)
          continue;
        out << (first ? "" : ",") << m[j] << "*z^" << j * stride;
        first = false;
      }
      if (first)
        out << "0";
    }
    out << "\n";
  }
}

} // namespace tenfold
