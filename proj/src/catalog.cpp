#include "tenfold/catalog.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "tenfold/error.hpp"

namespace tenfold
{

namespace
{

Perm identity_perm(std::size_t n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// Cycle (pts[0] pts[1] ...) on n points.
Perm cycle(std::size_t n, std::vector<std::uint32_t> const &pts)
{
  Perm p = identity_perm(n);
  for (std::size_t i = 0; i < pts.size(); ++i)
    p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

int perm_sign(Perm const &p)
{
  std::vector<bool> seen(p.size());
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      s = -s;
  }
  return s;
}

// Monomial matrix with entries in the r-th roots of unity, as a permutation
// of the points (j, t) = zeta^t e_j, indexed j*r + t. Column j carries
// zeta^e[j] in row sigma[j].
Perm monomial(std::size_t r, std::vector<std::uint32_t> const &sigma,
              std::vector<std::uint32_t> const &e)
{
  std::size_t n = sigma.size();
  Perm p(n * r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < r; ++t)
      p[j * r + t] = static_cast<std::uint32_t>(sigma[j] * r + (t + e[j]) % r);
  return p;
}

unsigned parse_positive(std::string const &s, std::string const &key)
{
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::InvalidArgument, "bad parameter in '" + key + "'");
  unsigned v = static_cast<unsigned>(std::stoul(s));
  if (v == 0)
    throw Error(Errc::InvalidArgument, "parameter must be positive in '" + key + "'");
  return v;
}

std::vector<Perm> cyclic_gens(unsigned k)
{
  std::vector<std::uint32_t> pts(k);
  std::iota(pts.begin(), pts.end(), 0u);
  return {cycle(k, pts)};
}

// Left-regular action of D_k on the points r^i s^e, indexed i + k*e.
std::pair<Perm, Perm> dihedral_gens(unsigned k)
{
  Perm r(2 * k), s(2 * k);
  for (unsigned e = 0; e < 2; ++e)
    for (unsigned i = 0; i < k; ++i) {
      r[i + k * e] = (i + 1) % k + k * e;
      s[i + k * e] = (k - i) % k + k * (1 - e);
    }
  return {r, s};
}

std::vector<Perm> symmetric_gens(unsigned k)
{
  if (k == 1)
    return {identity_perm(1)};
  if (k == 2)
    return {cycle(2, {0, 1})};
  std::vector<std::uint32_t> pts(k);
  std::iota(pts.begin(), pts.end(), 0u);
  return {cycle(k, pts), cycle(k, {0, 1})};
}

std::vector<Perm> alternating_gens(unsigned k)
{
  if (k <= 2)
    return {identity_perm(k)};
  std::vector<Perm> out;
  for (std::uint32_t i = 2; i < k; ++i)
    out.push_back(cycle(k, {0, 1, i}));
  return out;
}

std::vector<Perm> quaternion_gens()
{
  return {monomial(4, {0, 1}, {1, 3}), monomial(4, {1, 0}, {0, 2})};
}

RealPair from_file(std::string const &path, std::size_t cap)
{
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::InvalidArgument, "no catalog entry or readable file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::string first;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#')
        continue;
      std::istringstream ls(line);
      ls >> first;
      break;
    }
  }
  std::istringstream is(text);
  if (first == "perm") {
    auto gf = read_generators(is);
    return build_from_generators(gf.perms, gf.labels, cap);
  }
  if (first == "cayley") {
    auto cf = read_cayley(is);
    if (cf.group.order() > cap)
      throw Error(Errc::CapExceeded, "order " + std::to_string(cf.group.order()) +
                                       " exceeds cap " + std::to_string(cap));
    Elem id = cf.group.identity();
    auto g = cf.group.with_identity_first();
    if (cf.sign.empty())
      return trivial_real_structure(g, cap);
    std::swap(cf.sign[0], cf.sign[id]);
    return RealPair::make(std::move(g), std::move(cf.sign));
  }
  throw Error(Errc::ParseError, "'" + path + "' is neither a Cayley nor a generator file");
}

} // namespace

std::vector<CatalogEntry> const &catalog()
{
  static std::vector<CatalogEntry> const entries{
    {"trivial:<base>", "G x C2 over a base group C<k>, D<k>, Q8, S<k> or A<k>"},
    {"cyclic-in-dihedral:<k>", "C_k inside the dihedral group of order 2k"},
    {"c4-in-q8", "C4 inside the quaternion group"},
    {"an-in-sn:<k>", "A_k inside S_k, 2 <= k <= 6"},
    {"cyclic-in-cyclic:<k>", "C_k inside C_2k"},
    {"q8-in-pauli", "Q8 inside the Pauli group of order 16, the other coset generated by iI"},
    {"wreath:<base>", "base x base inside the wreath product with C2 swapping the factors"},
    {"cyclic-in-dicyclic:<k>", "C_2k inside the dicyclic group of order 4k"},
    {"index2:<file>", "Cayley or generator file; a plain Cayley table gets the trivial structure"},
  };
  return entries;
}

std::vector<std::string> standard_instances()
{
  std::vector<std::string> out;
  for (int k = 1; k <= 12; ++k)
    out.push_back("cyclic-in-dihedral:" + std::to_string(k));
  for (int k = 2; k <= 6; ++k)
    out.push_back("an-in-sn:" + std::to_string(k));
  out.push_back("c4-in-q8");
  for (auto b : {"C1", "C2", "C3", "C4", "C5", "C6", "D3", "D4", "D5", "D6", "Q8", "S3", "S4",
                 "A4", "S5"})
    out.push_back(std::string("trivial:") + b);
  for (int k = 1; k <= 8; ++k)
    out.push_back("cyclic-in-cyclic:" + std::to_string(k));
  out.push_back("q8-in-pauli");
  for (auto b : {"C2", "C3", "C4", "S3", "Q8"})
    out.push_back(std::string("wreath:") + b);
  for (int k = 2; k <= 6; ++k)
    out.push_back("cyclic-in-dicyclic:" + std::to_string(k));
  return out;
}

std::vector<Perm> base_generators(std::string const &base)
{
  if (base == "Q8")
    return quaternion_gens();
  if (base.size() >= 2) {
    std::string rest = base.substr(1);
    switch (base[0]) {
    case 'C':
      return cyclic_gens(parse_positive(rest, base));
    case 'D': {
      auto [r, s] = dihedral_gens(parse_positive(rest, base));
      return {r, s};
    }
    case 'S':
      return symmetric_gens(parse_positive(rest, base));
    case 'A':
      return alternating_gens(parse_positive(rest, base));
    default:
      break;
    }
  }
  throw Error(Errc::InvalidArgument, "unknown base group '" + base + "'");
}

RealPair resolve(std::string const &source, std::size_t cap)
{
  auto colon = source.find(':');
  std::string family = source.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : source.substr(colon + 1);
  bool has_arg = colon != std::string::npos;

  if (family == "trivial" && has_arg)
    return trivial_real_structure(group_from_generators(base_generators(arg), cap), cap);

  if (family == "cyclic-in-dihedral" && has_arg) {
    auto [r, s] = dihedral_gens(parse_positive(arg, source));
    return build_from_generators({r, s}, {1, -1}, cap);
  }
  if (source == "c4-in-q8") {
    auto q = quaternion_gens();
    return build_from_generators(q, {1, -1}, cap);
  }
  if (family == "an-in-sn" && has_arg) {
    unsigned k = parse_positive(arg, source);
    if (k < 2 || k > 6)
      throw Error(Errc::InvalidArgument, "an-in-sn needs 2 <= k <= 6");
    auto gens = symmetric_gens(k);
    std::vector<int> labels;
    for (auto const &p : gens)
      labels.push_back(perm_sign(p));
    return build_from_generators(gens, labels, cap);
  }
  if (family == "cyclic-in-cyclic" && has_arg) {
    unsigned k = parse_positive(arg, source);
    return build_from_generators(cyclic_gens(2 * k), {-1}, cap);
  }
  if (source == "q8-in-pauli") {
    std::vector<Perm> gens{monomial(4, {1, 0}, {1, 1}), monomial(4, {0, 1}, {1, 3}),
                           monomial(4, {0, 1}, {1, 1})};
    return build_from_generators(gens, {1, 1, -1}, cap);
  }
  if (family == "wreath" && has_arg) {
    auto base = base_generators(arg);
    std::size_t d = base.front().size();
    std::vector<Perm> gens;
    std::vector<int> labels;
    for (auto const &b : base)
      for (std::size_t copy = 0; copy < 2; ++copy) {
        Perm p = identity_perm(2 * d);
        for (std::size_t i = 0; i < d; ++i)
          p[copy * d + i] = static_cast<std::uint32_t>(copy * d + b[i]);
        gens.push_back(p);
        labels.push_back(1);
      }
    Perm swap(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      swap[i] = static_cast<std::uint32_t>(d + i);
      swap[d + i] = static_cast<std::uint32_t>(i);
    }
    gens.push_back(swap);
    labels.push_back(-1);
    return build_from_generators(gens, labels, cap);
  }
  if (family == "cyclic-in-dicyclic" && has_arg) {
    unsigned k = parse_positive(arg, source);
    std::vector<Perm> gens{monomial(2 * k, {0, 1}, {1, 2 * k - 1}),
                           monomial(2 * k, {1, 0}, {0, k})};
    return build_from_generators(gens, {1, -1}, cap);
  }
  if (family == "index2" && has_arg)
    return from_file(arg, cap);
  if (!has_arg || source.find('/') != std::string::npos || source.find('.') != std::string::npos)
    return from_file(source, cap);
  throw Error(Errc::InvalidArgument, "unknown catalog key '" + source + "'");
}

} // namespace tenfold
