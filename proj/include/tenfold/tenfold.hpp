#ifndef TENFOLD_TENFOLD_HPP
#define TENFOLD_TENFOLD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tenfold/chartab.hpp"
#include "tenfold/group.hpp"

namespace tenfold
{

/// The Klein four group {1, a, b, c} acting on a finite set. On classes a is
/// inversion and b is conjugation by a fixed element of the other coset; on
/// characters a is complex conjugation and b the twist by that element.
struct K4Action
{
  std::vector<std::uint32_t> a, b, c;

  std::size_t size() const { return a.size(); }
  // The action axioms: a, b, c are involutions, pairwise commute, c = ab.
  bool is_valid() const;

  friend bool operator==(K4Action const &, K4Action const &) = default;
};

enum class Stabilizer
{
  Full,
  A,
  B,
  C,
  Trivial,
};

std::string_view stabilizer_name(Stabilizer s);
Stabilizer stabilizer_of(K4Action const &act, std::size_t i);

K4Action k4_on_classes(RealPair const &rp, ClassData const &cd,
                       std::optional<Elem> twist = std::nullopt);

struct ClassCensus
{
  std::uint64_t c1 = 0, c2a = 0, c2b = 0, c2c = 0, c4 = 0;

  std::uint64_t total() const { return c1 + c2a + c2b + c2c + c4; }
  // real classes and non-real classes
  std::uint64_t real() const { return c1 + c2a; }
  std::uint64_t non_real() const { return c2b + c2c + c4; }

  friend bool operator==(ClassCensus const &, ClassCensus const &) = default;
};

ClassCensus class_census(K4Action const &act);

struct IndicatorPair
{
  int f = 0;
  int fsharp = 0;

  friend bool operator==(IndicatorPair const &, IndicatorPair const &) = default;
};

// F(chi) = |G|^-1 sum_{g in G} chi(g^2) and its twin over the other coset,
// also divided by |G|.
std::vector<IndicatorPair> fs_indicators(ModCharTable const &t, RealPair const &rp);

K4Action k4_on_characters(ModCharTable const &t, RealPair const &rp,
                          std::optional<Elem> twist = std::nullopt);

enum class DysonType
{
  I,
  II,
  III,
  IV,
  V,
  VI,
  VII,
  VIII,
  IX,
  X,
};

inline constexpr std::array<DysonType, 10> all_types{
  DysonType::I, DysonType::II, DysonType::III, DysonType::IV, DysonType::V,
  DysonType::VI, DysonType::VII, DysonType::VIII, DysonType::IX, DysonType::X};

std::string_view roman(DysonType t);
std::string_view dyson_label(DysonType t);

// Reference data of the ten types.
struct TypeRow
{
  int f;
  int fsharp;
  bool b_fixed;
  Stabilizer stab;
  int fhat; // indicator of the corresponding characters of the overgroup
};
TypeRow const &type_row(DysonType t);

DysonType classify(IndicatorPair ind, bool b_fixed);
// Also checks the full K4-stabilizer against the reference row.
DysonType classify(IndicatorPair ind, Stabilizer stab);

struct TypeCensus
{
  std::array<std::uint64_t, 10> n{};
  std::array<std::vector<std::uint64_t>, 10> dims; // sorted
  // From the ordinary indicator F alone: #{F=1}, #{F=0}, #{F=-1}.
  std::uint64_t n_real = 0, n_complex = 0, n_quaternionic = 0;
  std::vector<DysonType> types;                    // per character
  std::vector<IndicatorPair> indicators;           // per character

  std::uint64_t operator[](DysonType t) const { return n[static_cast<std::size_t>(t)]; }
  std::uint64_t &operator[](DysonType t) { return n[static_cast<std::size_t>(t)]; }
  std::vector<std::uint64_t> const &degrees(DysonType t) const
  { return dims[static_cast<std::size_t>(t)]; }
  std::uint64_t total() const;
};

TypeCensus dyson_census(ModCharTable const &t, RealPair const &rp);

struct GhatCensus
{
  std::uint64_t n_real = 0, n_complex = 0, n_quaternionic = 0;
  std::uint64_t c2hat = 0;            // non-real classes of the overgroup
  std::uint64_t class_count = 0;
  std::vector<int> fhat;              // per character of the overgroup

  bool complex_matches_classes() const { return n_complex == c2hat; }
};

GhatCensus ghat_census(ModCharTable const &t_ghat, RealPair const &rp);
GhatCensus ghat_census(RealPair const &rp, PrimeContext const &ctx,
                       DixonOptions const &opts = {});

struct CorrespondenceEntry
{
  std::size_t chi = 0;
  bool b_fixed = false;
  std::vector<std::size_t> partners; // characters psi of the overgroup
  std::vector<int> fhat;             // indicator of each partner
};

struct InductionReport
{
  std::vector<CorrespondenceEntry> entries;
  std::size_t one_to_two = 0; // b-fixed characters
  std::size_t two_to_one = 0; // b-moved characters
};

// Throws CorrespondenceViolation naming the first offending character.
InductionReport induction_correspondence(ModCharTable const &t_g, ModCharTable const &t_ghat,
                                         RealPair const &rp);

struct Residual
{
  std::string name;
  std::int64_t value = 0;
};

struct ConstraintReport
{
  std::vector<Residual> residuals;
  std::vector<std::string> parity_failures;
  std::optional<bool> k4_isomorphism;

  std::int64_t residual(std::string_view name) const;
  bool ok() const;
};

/// Evaluates the eighteen linear relations between the type census, the
/// class census and the overgroup census, with all denominators cleared,
/// together with the parity and divisibility conditions. sv and sw are the
/// positive-entry counts of the normalized indicator multisets.
ConstraintReport verify_constraints(TypeCensus const &tc, ClassCensus const &cc,
                                    GhatCensus const &gc, std::int64_t sv, std::int64_t sw);

// Number of points per stabilizer type, indexed by Stabilizer.
std::array<std::uint64_t, 5> orbit_type_census(K4Action const &act);
bool k4_isomorphism_check(K4Action const &on_characters, K4Action const &on_classes);

} // namespace tenfold

#endif // TENFOLD_TENFOLD_HPP
