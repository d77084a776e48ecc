#ifndef TENFOLD_ERROR_HPP
#define TENFOLD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tenfold
{

enum class Errc
{
  InvalidArgument,
  ParseError,
  // group-core
  NotAssociative,
  NoIdentity,
  NoInverse,
  CapExceeded,
  SignInconsistent,
  SignNotSurjective,
  // chartab
  SplitFailure,
  OrthogonalityFailure,
  // tenfold
  IndicatorOutOfRange,
  RowNotFound,
  StabilizerMismatch,
  CorrespondenceViolation,
  // words
  IdentityViolation,
  RecoveryInconsistent,
  // multisets
  IrrationalRoots,
  SingularSystem,
  NotRealizable,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
  : std::runtime_error(std::string(errc_name(code)) + ": " + what),
    code_(code)
  {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace tenfold

#endif // TENFOLD_ERROR_HPP
