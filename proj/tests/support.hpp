#ifndef TENFOLD_TESTS_SUPPORT_HPP
#define TENFOLD_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "tenfold/catalog.hpp"
#include "tenfold/chartab.hpp"
#include "tenfold/group.hpp"
#include "tenfold/modp.hpp"
#include "tenfold/tenfold.hpp"

namespace tenfold::support
{

// A Real structure with the table of its kernel over the overgroup's prime.
struct Loaded
{
  RealPair rp;
  ClassData cd;
  std::vector<std::uint64_t> coeffs;
  PrimeContext ctx;
  ModCharTable t;
};

inline Loaded load(RealPair rp)
{
  auto cd = conjugacy_classes(rp.g());
  auto coeffs = structure_constants(rp.g(), cd);
  auto ctx = choose_prime(rp.ghat());
  auto t = dixon_character_table(rp.g(), cd, ctx);
  return Loaded{std::move(rp), std::move(cd), std::move(coeffs), ctx, std::move(t)};
}

inline Loaded load(std::string const &key) { return load(resolve(key)); }

// Keys small enough for element-level oracles in unit tests.
inline std::vector<std::string> small_keys()
{
  return {"cyclic-in-dihedral:1", "cyclic-in-dihedral:3", "cyclic-in-dihedral:4",
          "cyclic-in-dihedral:6", "an-in-sn:4", "c4-in-q8", "trivial:C1", "trivial:C5",
          "trivial:Q8", "trivial:S3", "trivial:A4", "cyclic-in-cyclic:4", "q8-in-pauli",
          "wreath:C2", "wreath:C3", "cyclic-in-dicyclic:3"};
}

// Local index of the unique element of G with the given order, or -1.
inline long unique_of_order(CayleyGroup const &g, std::uint64_t order)
{
  long found = -1;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) {
      if (found >= 0)
        return -1;
      found = x;
    }
  return found;
}

} // namespace tenfold::support

#endif
