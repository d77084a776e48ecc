#ifndef TENFOLD_MULTISETS_HPP
#define TENFOLD_MULTISETS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tenfold
{

using BigInt = mpz_class;
using Rational = mpq_class;

// A finite multiset of rationals, kept sorted ascending.
class RationalMultiset
{
public:
  RationalMultiset() = default;
  explicit RationalMultiset(std::vector<Rational> entries);

  std::vector<Rational> const &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(RationalMultiset const &, RationalMultiset const &) = default;

private:
  std::vector<Rational> entries_;
};

std::string to_string(Rational const &q);
std::string to_string(RationalMultiset const &x);

// Exact power sums sum_q q^k for each requested k >= 1.
std::vector<Rational> power_sums(RationalMultiset const &x, std::span<unsigned const> ks);
std::vector<Rational> power_sums(RationalMultiset const &x, unsigned k_max); // k = 1..k_max

/**
 * Recovers a multiset of cardinality n from its first n power sums via
 * Newton's identities and exact rational-root extraction of prod (t - q_i).
 * Throws IrrationalRoots when that polynomial does not split over Q.
 */
RationalMultiset newton_recover(std::span<Rational const> powersums);

struct Multiplicities
{
  std::vector<std::uint64_t> counts;     // per candidate
  std::optional<std::uint64_t> zero;     // multiplicity of 0 when allowed
};

/**
 * Solves sum_i m_i y_i^(3k-2) = sums[k-1], k = 1..|y|, for the multiplicities
 * over distinct nonzero candidates y. Extra sums beyond |y| are checked.
 * With allow_zero the remainder n - sum m_i is the multiplicity of 0;
 * otherwise the m_i must add up to n.
 */
Multiplicities recover_multiplicities(std::span<Rational const> y, std::uint64_t n,
                                      std::span<Rational const> sums, bool allow_zero);

// Exponent sequences for the search harness.
enum class ExponentFamily
{
  Sparse, // 3k - 2
  Dense,  // k
};

unsigned exponent_at(ExponentFamily fam, unsigned k);

struct ConjectureResult
{
  std::optional<std::pair<RationalMultiset, RationalMultiset>> counterexample;
  std::uint64_t multisets = 0;
  std::uint64_t pairs_examined = 0;
};

// Exhaustive search over all pairs of size-n multisets drawn from `pool`
// for two distinct ones sharing the power sums at exponents e_1..e_n. The
// lexicographically least colliding pair is reported. Throws CapExceeded when
// the number of pairs exceeds `budget`.
ConjectureResult conjecture_search(unsigned n, std::vector<Rational> pool,
                                   ExponentFamily fam = ExponentFamily::Sparse,
                                   std::uint64_t budget = 1'000'000, unsigned jobs = 1);

} // namespace tenfold

#endif // TENFOLD_MULTISETS_HPP
