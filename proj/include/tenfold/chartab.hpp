#ifndef TENFOLD_CHARTAB_HPP
#define TENFOLD_CHARTAB_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "tenfold/group.hpp"

namespace tenfold
{

/**
 * A prime p = 1 (mod e) together with a primitive e-th root of unity mod p.
 *
 * With p > 2|G| every integer quantity derived from a character table of G
 * (degrees, indicators, multiplicities, censuses) has a unique lift from
 * its residue, and the cyclotomic field Q(zeta_e) embeds into F_p.
 */
struct PrimeContext
{
  std::uint64_t p = 0;
  std::uint64_t e = 1;
  std::uint64_t zeta = 1;

  // p = 1 (mod exp(g)) with exp(g) | e, p > 2|g|, and zeta of order e.
  bool valid_for(CayleyGroup const &g) const;

  friend bool operator==(PrimeContext const &, PrimeContext const &) = default;
};

// Smallest prime p = 1 (mod exponent) with p > 2*order; zeta is the least
// residue of multiplicative order exactly `exponent`.
PrimeContext choose_prime(std::uint64_t order, std::uint64_t exponent);
PrimeContext choose_prime(CayleyGroup const &g);

struct ModCharTable
{
  PrimeContext ctx;
  std::uint64_t group_order = 0;
  ClassData classes;
  // values[chi][K], residues mod ctx.p
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::uint64_t> degrees;

  std::size_t size() const { return values.size(); }
  std::uint64_t value(std::size_t chi, std::size_t k) const { return values[chi][k]; }

  friend bool operator==(ModCharTable const &a, ModCharTable const &b)
  {
    return a.ctx == b.ctx && a.group_order == b.group_order && a.values == b.values &&
           a.degrees == b.degrees && a.classes.classes == b.classes.classes;
  }
};

struct ClassFunctionMod
{
  PrimeContext ctx;
  std::vector<std::uint64_t> values;

  friend bool operator==(ClassFunctionMod const &, ClassFunctionMod const &) = default;
};

struct DixonOptions
{
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// Irreducible characters as common eigenvectors of the class matrices over
// F_p. Rows are sorted by (degree, residue vector).
ModCharTable dixon_character_table(CayleyGroup const &g, ClassData const &cd,
                                   PrimeContext const &ctx, DixonOptions const &opts = {});

struct OrthogonalityReport
{
  bool rows_ok = true;
  bool columns_ok = true;
  bool degrees_ok = true;
  // (chi, chi') pairs where row orthogonality fails
  std::vector<std::pair<std::size_t, std::size_t>> bad_row_pairs;

  bool ok() const { return rows_ok && columns_ok && degrees_ok; }
};

OrthogonalityReport verify_orthogonality(ModCharTable const &t);

// `chartab r e` followed by r rows of c ';'-separated values, each value a
// ','-separated list of `m*z^j` terms over zeta_e.
ModCharTable import_table(std::istream &in, CayleyGroup const &g, ClassData const &cd,
                          PrimeContext const &ctx);

// Writes t in the import format over zeta_{ctx.e}.
void export_table(std::ostream &out, ModCharTable const &t, CayleyGroup const &g);

/**
 * Eigenvalue multiplicities of chi on the cyclic group generated by the
 * representative of class k: returns m (length s = order of the
 * representative) with chi(g) = sum_j m[j] zeta_s^j and sum_j m[j] = chi(1).
 */
std::vector<std::uint64_t> cyclotomic_lift(ModCharTable const &t, CayleyGroup const &g,
                                           std::size_t chi, std::size_t k);

// Sorts rows by (degree, residue vector) in place.
void canonicalize(ModCharTable &t);

} // namespace tenfold

#endif // TENFOLD_CHARTAB_HPP
