#ifndef TENFOLD_GROUP_HPP
#define TENFOLD_GROUP_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace tenfold
{

class RealPair;

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

inline constexpr std::size_t default_order_cap = 4096;

// Associativity is checked exhaustively up to this order and by Light's test
// over a generating set above it.
inline constexpr std::size_t exhaustive_assoc_limit = 512;

/**
 * A finite group materialized as a full multiplication table.
 *
 * Elements are the dense indices 0..order()-1. Instances are immutable and
 * only obtainable through validating constructors.
 */
class CayleyGroup
{
public:
  // Validates and builds from an n x n table; indices are kept as given.
  static CayleyGroup from_table(std::vector<std::vector<Elem>> const &table);

  std::size_t order() const { return n_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv_[x]); }
  Elem square(Elem a) const { return mul(a, a); }
  Elem pow(Elem a, std::uint64_t k) const;

  std::uint64_t element_order(Elem a) const { return orders_[a]; }
  std::uint64_t exponent() const { return exponent_; }

  std::vector<std::vector<Elem>> rows() const;

  // Relabels element i as new_index[i]; new_index must be a permutation.
  CayleyGroup relabeled(std::span<Elem const> new_index) const;

  // Swaps the identity with index 0 (no-op if already there).
  CayleyGroup with_identity_first() const;

  // A small generating set, chosen greedily by ascending index.
  std::vector<Elem> generating_set() const;

  friend bool operator==(CayleyGroup const &, CayleyGroup const &) = default;

private:
  CayleyGroup() = default;

  // Trusted construction: the table is known to be a group.
  static CayleyGroup trusted(std::size_t n, std::vector<Elem> table);
  void derive();

  friend class RealPair;
  friend CayleyGroup group_from_generators(std::vector<Perm> const &, std::size_t);
  friend RealPair build_from_generators(std::vector<Perm> const &,
                                        std::vector<int> const &, std::size_t);
  friend RealPair trivial_real_structure(CayleyGroup const &, std::size_t);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
};

/**
 * A Real structure: an overgroup of index 2 given by a surjective sign
 * homomorphism. The kernel is materialized as its own CayleyGroup whose
 * local indices follow ascending order of the ambient indices.
 */
class RealPair
{
public:
  // Validates sign as a surjective homomorphism onto {+1,-1}.
  static RealPair make(CayleyGroup ghat, std::vector<int> sign);

  CayleyGroup const &ghat() const { return ghat_; }
  CayleyGroup const &g() const { return g_; }
  int sign(Elem x) const { return sign_[x]; }
  std::vector<int> const &signs() const { return sign_; }

  // Ambient indices of G and of the other coset, ascending.
  std::vector<Elem> const &g_indices() const { return g_indices_; }
  std::vector<Elem> const &gsharp_indices() const { return gsharp_indices_; }

  Elem embed(Elem local) const { return g_indices_[local]; }
  // Local index in G of an ambient element that lies in G.
  Elem local(Elem ambient) const { return static_cast<Elem>(to_local_[ambient]); }
  bool in_g(Elem ambient) const { return sign_[ambient] == 1; }

  // Least-index element of the non-identity coset.
  Elem default_twist() const { return gsharp_indices_.front(); }

private:
  RealPair() = default;

  CayleyGroup ghat_;
  CayleyGroup g_;
  std::vector<int> sign_;
  std::vector<Elem> g_indices_;
  std::vector<Elem> gsharp_indices_;
  std::vector<std::int64_t> to_local_;
};

struct ClassData
{
  // Each class sorted ascending; representative is the front element.
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint64_t> sizes;

  std::size_t count() const { return classes.size(); }
  Elem representative(std::size_t k) const { return classes[k].front(); }
};

ClassData conjugacy_classes(CayleyGroup const &g);

// Class multiplication coefficients: K_j K_k = sum_l a(j,k,l) K_l, stored at
// index (j*c + k)*c + l. Work is split over `jobs` threads by j; the result
// does not depend on the split.
std::vector<std::uint64_t> structure_constants(CayleyGroup const &g, ClassData const &cd,
                                               unsigned jobs = 1);

// Permutation product convention: (a*b)(i) = a[b[i]], i.e. b acts first.
Perm perm_mul(Perm const &a, Perm const &b);
Perm parse_cycles(std::string const &text, std::size_t degree);

// Breadth-first closure; elements indexed by discovery order (identity = 0).
CayleyGroup group_from_generators(std::vector<Perm> const &perms,
                                  std::size_t cap = default_order_cap);

// labels[i] in {+1,-1} is the sign of perms[i].
RealPair build_from_generators(std::vector<Perm> const &perms,
                               std::vector<int> const &labels,
                               std::size_t cap = default_order_cap);

// G x C2 with sign the projection; (g, s) has index g + |G|*s.
RealPair trivial_real_structure(CayleyGroup const &g,
                                std::size_t cap = default_order_cap);

// Text formats. A Cayley file may carry an optional trailing
// `sign <+|-> ...` line turning it into a Real structure.
struct CayleyFile
{
  CayleyGroup group;
  std::vector<int> sign; // empty when absent
};

struct GeneratorFile
{
  std::size_t degree = 0;
  std::vector<Perm> perms;
  std::vector<int> labels;
};

CayleyFile read_cayley(std::istream &in);
GeneratorFile read_generators(std::istream &in);
void write_cayley(std::ostream &out, CayleyGroup const &g,
                  std::vector<int> const &sign = {});

} // namespace tenfold

#endif // TENFOLD_GROUP_HPP
