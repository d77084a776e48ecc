#include "tenfold/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "tenfold/error.hpp"

namespace tenfold
{

namespace
{

std::string triple(Elem a, Elem b, Elem c)
{
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p)
      h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

struct Closure
{
  std::size_t n = 0;
  std::vector<Elem> table;
  std::vector<int> sign;
};

// Breadth-first closure of a permutation group. Element j > 0 is recorded as
// parent(j) * gens[via(j)], which lets the full table be filled by lookups.
Closure close_perms(std::vector<Perm> const &gens, std::vector<int> const *labels,
                    std::size_t cap)
{
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (auto const &g : gens) {
    if (g.size() != degree)
      throw Error(Errc::InvalidArgument, "generators act on different numbers of points");
    std::vector<bool> seen(degree, false);
    for (auto x : g) {
      if (x >= degree || seen[x])
        throw Error(Errc::InvalidArgument, "generator is not a permutation");
      seen[x] = true;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Perm> elems{id};
  std::unordered_map<Perm, Elem, PermHash> index{{id, 0}};
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<int> sign{1};
  std::vector<Elem> rmul; // rmul[k * |gens| + s] = index of elems[k] * gens[s]

  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm p = perm_mul(elems[k], gens[s]);
      int sg = labels ? sign[k] * (*labels)[s] : 1;
      auto it = index.find(p);
      if (it == index.end()) {
        if (elems.size() >= cap)
          throw Error(Errc::CapExceeded,
                      "group order exceeds cap " + std::to_string(cap));
        auto j = static_cast<Elem>(elems.size());
        index.emplace(p, j);
        elems.push_back(std::move(p));
        parent.push_back(static_cast<Elem>(k));
        via.push_back(s);
        sign.push_back(sg);
        rmul.push_back(j);
      } else {
        if (labels && sign[it->second] != sg)
          throw Error(Errc::SignInconsistent,
                      "element " + std::to_string(it->second) +
                        " is reached with both signs");
        rmul.push_back(it->second);
      }
    }
  }

  Closure out;
  out.n = elems.size();
  out.table.assign(out.n * out.n, 0);
  std::size_t ng = gens.size();
  for (std::size_t x = 0; x < out.n; ++x) {
    out.table[x * out.n] = static_cast<Elem>(x);
    for (std::size_t j = 1; j < out.n; ++j) {
      Elem left = out.table[x * out.n + parent[j]];
      out.table[x * out.n + j] = rmul[left * ng + via[j]];
    }
  }
  out.sign = std::move(sign);
  return out;
}

} // namespace

Elem CayleyGroup::pow(Elem a, std::uint64_t k) const
{
  Elem result = identity_;
  Elem base = a;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

CayleyGroup CayleyGroup::trusted(std::size_t n, std::vector<Elem> table)
{
  CayleyGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.derive();
  return g;
}

void CayleyGroup::derive()
{
  // identity and inverses, assuming group axioms
  for (Elem e = 0; e < n_; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n_ && ok; ++g)
      ok = mul(e, g) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inv_.assign(n_, 0);
  for (Elem g = 0; g < n_; ++g)
    for (Elem h = 0; h < n_; ++h)
      if (mul(g, h) == identity_) {
        inv_[g] = h;
        break;
      }

  orders_.assign(n_, 1);
  exponent_ = 1;
  for (Elem g = 0; g < n_; ++g) {
    std::uint64_t k = 1;
    for (Elem x = g; x != identity_; x = mul(x, g))
      ++k;
    orders_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

CayleyGroup CayleyGroup::from_table(std::vector<std::vector<Elem>> const &rows)
{
  std::size_t n = rows.size();
  if (n == 0)
    throw Error(Errc::InvalidArgument, "empty multiplication table");

  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(Errc::InvalidArgument,
                  "row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
    for (auto x : rows[i]) {
      if (x >= n)
        throw Error(Errc::InvalidArgument,
                    "entry " + std::to_string(x) + " out of range in row " + std::to_string(i));
      table.push_back(x);
    }
  }
  auto at = [&](Elem a, Elem b) { return table[std::size_t(a) * n + b]; };

  std::int64_t identity = -1;
  for (Elem e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g)
      ok = at(e, g) == g && at(g, e) == g;
    if (ok)
      identity = e;
  }
  if (identity < 0)
    throw Error(Errc::NoIdentity, "no two-sided identity in table");
  auto e = static_cast<Elem>(identity);

  for (Elem g = 0; g < n; ++g) {
    bool found = false;
    for (Elem h = 0; h < n && !found; ++h)
      found = at(g, h) == e && at(h, g) == e;
    if (!found)
      throw Error(Errc::NoInverse, "element " + std::to_string(g) + " has no two-sided inverse");
  }

  CayleyGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.identity_ = e;

  if (n <= exhaustive_assoc_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem ab = g.mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
            throw Error(Errc::NotAssociative, "witness " + triple(a, b, c));
      }
  } else {
    // Light's test: the elements s with (xs)y = x(sy) for all x, y form a
    // submagma, so checking a generating set suffices.
    for (Elem s : g.generating_set())
      for (Elem a = 0; a < n; ++a) {
        Elem as = g.mul(a, s);
        for (Elem c = 0; c < n; ++c)
          if (g.mul(as, c) != g.mul(a, g.mul(s, c)))
            throw Error(Errc::NotAssociative, "witness " + triple(a, s, c));
      }
  }

  g.derive();
  return g;
}

std::vector<Elem> CayleyGroup::generating_set() const
{
  std::vector<Elem> gens;
  std::vector<bool> reached(n_, false);
  std::size_t count = 0;
  for (Elem cand = 0; cand < n_ && count < n_; ++cand) {
    if (reached[cand] || cand == identity_)
      continue;
    gens.push_back(cand);
    // closure under right multiplication by generators, from scratch
    std::fill(reached.begin(), reached.end(), false);
    std::vector<Elem> queue;
    for (Elem s : gens)
      if (!reached[s]) {
        reached[s] = true;
        queue.push_back(s);
      }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elem s : gens) {
        Elem t = mul(queue[i], s);
        if (!reached[t]) {
          reached[t] = true;
          queue.push_back(t);
        }
      }
    count = queue.size();
  }
  return gens;
}

std::vector<std::vector<Elem>> CayleyGroup::rows() const
{
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  return out;
}

CayleyGroup CayleyGroup::relabeled(std::span<Elem const> new_index) const
{
  if (new_index.size() != n_)
    throw Error(Errc::InvalidArgument, "relabeling has wrong length");
  std::vector<bool> seen(n_, false);
  for (auto x : new_index) {
    if (x >= n_ || seen[x])
      throw Error(Errc::InvalidArgument, "relabeling is not a permutation");
    seen[x] = true;
  }
  std::vector<Elem> table(n_ * n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      table[std::size_t(new_index[a]) * n_ + new_index[b]] = new_index[mul(a, b)];
  return trusted(n_, std::move(table));
}

CayleyGroup CayleyGroup::with_identity_first() const
{
  if (identity_ == 0)
    return *this;
  std::vector<Elem> perm(n_);
  std::iota(perm.begin(), perm.end(), 0u);
  std::swap(perm[0], perm[identity_]);
  return relabeled(perm);
}

RealPair RealPair::make(CayleyGroup ghat, std::vector<int> sign)
{
  std::size_t n = ghat.order();
  if (sign.size() != n)
    throw Error(Errc::InvalidArgument, "sign vector has wrong length");
  for (auto s : sign)
    if (s != 1 && s != -1)
      throw Error(Errc::InvalidArgument, "sign values must be +1 or -1");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (sign[ghat.mul(a, b)] != sign[a] * sign[b])
        throw Error(Errc::SignInconsistent,
                    "sign(" + std::to_string(a) + "*" + std::to_string(b) + ") != sign(" +
                      std::to_string(a) + ")sign(" + std::to_string(b) + ")");

  RealPair rp;
  rp.to_local_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (sign[x] == 1) {
      rp.to_local_[x] = static_cast<std::int64_t>(rp.g_indices_.size());
      rp.g_indices_.push_back(x);
    } else {
      rp.gsharp_indices_.push_back(x);
    }
  }
  if (rp.gsharp_indices_.empty())
    throw Error(Errc::SignNotSurjective, "every element has sign +1");

  std::size_t m = rp.g_indices_.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = static_cast<Elem>(
        rp.to_local_[ghat.mul(rp.g_indices_[i], rp.g_indices_[j])]);
  rp.g_ = CayleyGroup::trusted(m, std::move(table));
  rp.ghat_ = std::move(ghat);
  rp.sign_ = std::move(sign);
  return rp;
}

ClassData conjugacy_classes(CayleyGroup const &g)
{
  std::size_t n = g.order();
  ClassData cd;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  cd.class_of.assign(n, unset);
  for (Elem x = 0; x < n; ++x) {
    if (cd.class_of[x] != unset)
      continue;
    auto k = static_cast<std::uint32_t>(cd.classes.size());
    std::vector<Elem> cls;
    for (Elem h = 0; h < n; ++h) {
      Elem y = g.conj(h, x);
      if (cd.class_of[y] == unset) {
        cd.class_of[y] = k;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.sizes.push_back(cls.size());
    cd.classes.push_back(std::move(cls));
  }
  cd.inverse_class.resize(cd.count());
  for (std::size_t k = 0; k < cd.count(); ++k)
    cd.inverse_class[k] = cd.class_of[g.inv(cd.representative(k))];
  return cd;
}

std::vector<std::uint64_t> structure_constants(CayleyGroup const &g, ClassData const &cd,
                                               unsigned jobs)
{
  std::size_t c = cd.count();
  std::vector<std::uint64_t> a(c * c * c, 0);
  auto fill = [&](std::size_t j) {
    for (std::size_t l = 0; l < c; ++l) {
      Elem target = cd.representative(l);
      for (Elem x : cd.classes[j]) {
        std::size_t k = cd.class_of[g.mul(g.inv(x), target)];
        ++a[(j * c + k) * c + l];
      }
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(c)));
  if (jobs == 1) {
    for (std::size_t j = 0; j < c; ++j)
      fill(j);
    return a;
  }
  // each j writes a disjoint slab of `a`
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t j = w; j < c; j += jobs)
        fill(j);
    });
  workers.clear();
  return a;
}

Perm perm_mul(Perm const &a, Perm const &b)
{
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = a[b[i]];
  return out;
}

Perm parse_cycles(std::string const &text, std::size_t degree)
{
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto fail = [&](std::string const &why) {
    throw Error(Errc::ParseError, "bad cycle notation '" + text + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        fail("expected a point");
      auto pt = std::stoul(text.substr(start, i - start));
      if (pt >= degree)
        fail("point " + std::to_string(pt) + " out of range");
      if (used[pt])
        fail("point " + std::to_string(pt) + " repeated");
      used[pt] = true;
      cycle.push_back(static_cast<std::uint32_t>(pt));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

CayleyGroup group_from_generators(std::vector<Perm> const &perms, std::size_t cap)
{
  auto cl = close_perms(perms, nullptr, cap);
  return CayleyGroup::trusted(cl.n, std::move(cl.table));
}

RealPair build_from_generators(std::vector<Perm> const &perms,
                               std::vector<int> const &labels, std::size_t cap)
{
  if (perms.size() != labels.size())
    throw Error(Errc::InvalidArgument, "one label per generator required");
  for (auto s : labels)
    if (s != 1 && s != -1)
      throw Error(Errc::InvalidArgument, "labels must be +1 or -1");
  auto cl = close_perms(perms, &labels, cap);
  return RealPair::make(CayleyGroup::trusted(cl.n, std::move(cl.table)), std::move(cl.sign));
}

RealPair trivial_real_structure(CayleyGroup const &g, std::size_t cap)
{
  std::size_t n = g.order();
  if (2 * n > cap)
    throw Error(Errc::CapExceeded, "order " + std::to_string(2 * n) + " exceeds cap " +
                                     std::to_string(cap));
  std::size_t m = 2 * n;
  std::vector<Elem> table(m * m);
  std::vector<int> sign(m);
  for (std::size_t x = 0; x < m; ++x) {
    sign[x] = x < n ? 1 : -1;
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t s = (x / n) ^ (y / n);
      table[x * m + y] = static_cast<Elem>(g.mul(Elem(x % n), Elem(y % n)) + n * s);
    }
  }
  return RealPair::make(CayleyGroup::trusted(m, std::move(table)), std::move(sign));
}

namespace
{

// Next line that is neither blank nor a '#' comment.
bool next_line(std::istream &in, std::string &line)
{
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#')
      continue;
    return true;
  }
  return false;
}

} // namespace

CayleyFile read_cayley(std::istream &in)
{
  std::string line;
  if (!next_line(in, line))
    throw Error(Errc::ParseError, "empty Cayley file");
  std::istringstream header(line);
  std::string tag;
  long long n = 0;
  if (!(header >> tag >> n) || tag != "cayley" || n < 1)
    throw Error(Errc::ParseError, "expected header 'cayley n'");

  std::vector<std::vector<Elem>> rows(n);
  for (long long i = 0; i < n; ++i) {
    if (!next_line(in, line))
      throw Error(Errc::ParseError, "missing row " + std::to_string(i));
    std::istringstream row(line);
    long long x;
    while (row >> x) {
      if (x < 0)
        throw Error(Errc::ParseError, "negative entry in row " + std::to_string(i));
      rows[i].push_back(static_cast<Elem>(x));
    }
    if (!row.eof())
      throw Error(Errc::ParseError, "non-integer entry in row " + std::to_string(i));
    if (static_cast<long long>(rows[i].size()) != n)
      throw Error(Errc::ParseError, "row " + std::to_string(i) + " has wrong length");
  }

  std::vector<int> sign;
  if (next_line(in, line)) {
    std::istringstream tail(line);
    tail >> tag;
    if (tag != "sign")
      throw Error(Errc::ParseError, "unexpected trailing line '" + line + "'");
    std::string s;
    while (tail >> s) {
      if (s == "+")
        sign.push_back(1);
      else if (s == "-")
        sign.push_back(-1);
      else
        throw Error(Errc::ParseError, "sign entries must be '+' or '-'");
    }
    if (static_cast<long long>(sign.size()) != n)
      throw Error(Errc::ParseError, "sign line has wrong length");
  }
  return CayleyFile{CayleyGroup::from_table(rows), std::move(sign)};
}

GeneratorFile read_generators(std::istream &in)
{
  std::string line;
  if (!next_line(in, line))
    throw Error(Errc::ParseError, "empty generator file");
  std::istringstream header(line);
  std::string tag;
  long long m = -1;
  if (!(header >> tag >> m) || tag != "perm" || m < 0)
    throw Error(Errc::ParseError, "expected header 'perm m'");

  GeneratorFile out;
  out.degree = static_cast<std::size_t>(m);
  while (next_line(in, line)) {
    std::istringstream gen(line);
    std::string sign;
    if (!(gen >> tag >> sign) || tag != "gen" || (sign != "+" && sign != "-"))
      throw Error(Errc::ParseError, "expected 'gen <+|-> <cycles>', got '" + line + "'");
    std::string rest;
    std::getline(gen, rest);
    out.perms.push_back(parse_cycles(rest, out.degree));
    out.labels.push_back(sign == "+" ? 1 : -1);
  }
  if (out.perms.empty())
    throw Error(Errc::ParseError, "no generators");
  return out;
}

void write_cayley(std::ostream &out, CayleyGroup const &g, std::vector<int> const &sign)
{
  out << "cayley " << g.order() << "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b)
      out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  if (!sign.empty()) {
    out << "sign";
    for (auto s : sign)
      out << (s > 0 ? " +" : " -");
    out << "\n";
  }
}

} // namespace tenfold
