#ifndef TENFOLD_ANALYSIS_HPP
#define TENFOLD_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tenfold/chartab.hpp"
#include "tenfold/group.hpp"
#include "tenfold/tenfold.hpp"
#include "tenfold/words.hpp"

namespace tenfold
{

struct AnalysisOptions
{
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<unsigned> theta_depth;
  std::uint64_t bruteforce_cap = default_bruteforce_cap;
  // Largest coset size for which every twist element is tried.
  std::size_t twist_limit = 60;
};

// One comparison of counting methods for a single word.
struct ThetaCheck
{
  std::string word;
  bool bruteforce_run = false;
  bool agree = false;
  BigInt at_identity;
};

struct Analysis
{
  Analysis(std::string source_, RealPair rp_) : source(std::move(source_)), rp(std::move(rp_)) {}

  std::string source;
  RealPair rp;
  PrimeContext ctx;
  std::uint64_t seed = 0;

  ClassData classes;             // of G
  std::vector<std::uint64_t> coeffs;
  ModCharTable table;            // of G
  ModCharTable table_hat;        // of the overgroup
  OrthogonalityReport orth, orth_hat;

  K4Action on_classes, on_characters;
  ClassCensus class_census;
  TypeCensus types;
  GhatCensus ghat;
  std::optional<InductionReport> induction;
  std::string induction_error;

  IndicatorMultisets x;
  ThetaSequences sequences;
  IdentityReport identity;
  std::vector<ThetaCheck> theta_checks;
  std::optional<RecoveredCensus> recovered;
  std::string recovery_error;
  RecoveredCensus from_table;

  ConstraintReport constraints;
  std::optional<bool> twist_independent; // unset when the coset is too large

  bool theta_ok() const;
  bool ok() const;
};

Analysis analyze(RealPair rp, std::string source, AnalysisOptions const &opts = {});

// Every twist element gives the same K4 tables on classes and on characters.
bool twist_independence(RealPair const &rp, ClassData const &cd, ModCharTable const &t);

// Canonical report: fixed key order, sorted multisets, no timing.
nlohmann::ordered_json report_json(Analysis const &a);
std::string report_text(Analysis const &a);

} // namespace tenfold

#endif // TENFOLD_ANALYSIS_HPP
