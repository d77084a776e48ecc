#ifndef TENFOLD_CATALOG_HPP
#define TENFOLD_CATALOG_HPP

#include <string>
#include <vector>

#include "tenfold/group.hpp"

namespace tenfold
{

struct CatalogEntry
{
  std::string key;         // family pattern, e.g. "cyclic-in-dihedral:<k>"
  std::string description;
};

std::vector<CatalogEntry> const &catalog();

// A representative list of concrete keys covering every family.
std::vector<std::string> standard_instances();

// Permutation generators of the base groups C<k>, D<k>, Q8, S<k>, A<k>.
std::vector<Perm> base_generators(std::string const &base);

// Builds the Real structure for a catalog key, "index2:<file>" or a path to a
// Cayley or generator file. The identity is moved to index 0.
RealPair resolve(std::string const &source, std::size_t cap = default_order_cap);

} // namespace tenfold

#endif // TENFOLD_CATALOG_HPP
