#ifndef TENFOLD_WORDS_HPP
#define TENFOLD_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tenfold/group.hpp"
#include "tenfold/multisets.hpp"
#include "tenfold/tenfold.hpp"

namespace tenfold
{

enum class Coset
{
  G,
  Sharp,
};

// Products of squares of independent variables, each ranging over G or the
// other coset. v_m = z_1^2 ... z_m^2 and w_n = (y^2 y^2 z^2)^n.
struct WordSpec
{
  enum class Kind
  {
    V,
    W,
    Custom,
  };

  Kind kind = Kind::V;
  unsigned count = 1;
  std::vector<Coset> custom;

  static WordSpec v(unsigned m) { return {Kind::V, m, {}}; }
  static WordSpec w(unsigned n) { return {Kind::W, n, {}}; }
  // "v:3", "w:1" or "custom:yyz" (y ranges over G, z over the other coset)
  static WordSpec parse(std::string const &text);

  std::vector<Coset> letters() const;
  std::string str() const;
};

// Nonnegative integer function on G, indexed by local element index.
struct CountFunction
{
  std::vector<BigInt> values;

  BigInt total() const;
  friend bool operator==(CountFunction const &, CountFunction const &) = default;
};

inline constexpr std::uint64_t default_convolution_budget = 4'000'000'000ULL;
inline constexpr std::uint64_t default_bruteforce_cap = 10'000'000ULL;

// values[g] = #{z in the coset : z^2 = g}
CountFunction square_counts(RealPair const &rp, Coset coset);

CountFunction convolve(CayleyGroup const &g, CountFunction const &f1, CountFunction const &f2);

// Theta_w over the full element domain by iterated convolution.
CountFunction theta_convolution(RealPair const &rp, WordSpec const &w,
                                std::uint64_t budget = default_convolution_budget);

// Same result computed on class sums with the class multiplication
// coefficients of G.
CountFunction theta_class_convolution(RealPair const &rp, ClassData const &cd,
                                      std::vector<std::uint64_t> const &coeffs,
                                      WordSpec const &w);

// Exhaustive tuple enumeration: the full histogram of word values, and its
// value at the local index g.
CountFunction theta_bruteforce_all(RealPair const &rp, WordSpec const &w,
                                   std::uint64_t cap = default_bruteforce_cap, unsigned jobs = 1);
BigInt theta_bruteforce(RealPair const &rp, WordSpec const &w, Elem g,
                        std::uint64_t cap = default_bruteforce_cap, unsigned jobs = 1);

struct IndicatorMultiset
{
  RationalMultiset entries;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
};

struct IndicatorMultisets
{
  IndicatorMultiset xv; // F#(chi)/chi(1)
  IndicatorMultiset xw; // F(chi)^2 F#(chi)/chi(1)
};

IndicatorMultisets build_indicator_multisets(ModCharTable const &t,
                                             std::vector<IndicatorPair> const &indicators);

struct IdentityViolation
{
  std::string word;
  unsigned index = 0;
  BigInt counted;
  Rational predicted;
};

struct IdentityReport
{
  std::vector<IdentityViolation> violations;
  unsigned v_checked = 0;
  unsigned w_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Theta(v_m, 1) = |G|^(m-1) pw_(m-2)(X_v) for m = 3..k_max+2 and
// Theta(w_n, 1) = |G|^(3n-1) pw_(3n-2)(X_w) for 3n-2 <= k_max.
IdentityReport power_sum_identity_check(RealPair const &rp, ClassData const &cd,
                                        std::vector<std::uint64_t> const &coeffs,
                                        IndicatorMultisets const &x, unsigned k_max);

// Theta values at the identity, computed without characters.
struct ThetaSequences
{
  std::uint64_t group_order = 0;
  std::uint64_t class_count = 0;
  std::vector<BigInt> v; // v[i] = Theta(v_(i+3), 1)
  std::vector<BigInt> w; // w[i] = Theta(w_(i+1), 1)
};

// Candidate values of the normalized indicators: +-1/d for d | |G|.
std::vector<Rational> candidate_values(std::uint64_t group_order);

// Minimum sequence lengths consumed by recover_census_from_theta.
unsigned required_v_terms(std::uint64_t class_count);
unsigned required_w_terms(std::uint64_t group_order);

ThetaSequences theta_sequences(RealPair const &rp, ClassData const &cd,
                               std::vector<std::uint64_t> const &coeffs, unsigned v_terms,
                               unsigned w_terms);

struct RecoveredCensus
{
  std::uint64_t pos_v = 0; // N_I + N_V + N_IX
  std::uint64_t neg_v = 0; // N_II + N_VI + N_VIII
  std::uint64_t s_v = 0;
  std::uint64_t s_w = 0;
  std::uint64_t pos_w = 0; // N_I + N_IX
  std::uint64_t neg_w = 0; // N_II + N_VIII
  RationalMultiset xv;
  unsigned v_terms_used = 0;
  unsigned w_terms_used = 0;
};

// Compares the counts and X_v, ignoring how many terms were consumed.
bool same_census(RecoveredCensus const &a, RecoveredCensus const &b);

RecoveredCensus recover_census_from_theta(ThetaSequences const &seq);

// The same quantities read off the type census.
RecoveredCensus census_from_types(TypeCensus const &tc, IndicatorMultisets const &x);

} // namespace tenfold

#endif // TENFOLD_WORDS_HPP
