#include "tenfold/error.hpp"

namespace tenfold
{

std::string_view errc_name(Errc code)
{
  switch (code) {
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::ParseError: return "ParseError";
  case Errc::NotAssociative: return "NotAssociative";
  case Errc::NoIdentity: return "NoIdentity";
  case Errc::NoInverse: return "NoInverse";
  case Errc::CapExceeded: return "CapExceeded";
  case Errc::SignInconsistent: return "SignInconsistent";
  case Errc::SignNotSurjective: return "SignNotSurjective";
  case Errc::SplitFailure: return "SplitFailure";
  case Errc::OrthogonalityFailure: return "OrthogonalityFailure";
  case Errc::IndicatorOutOfRange: return "IndicatorOutOfRange";
  case Errc::RowNotFound: return "RowNotFound";
  case Errc::StabilizerMismatch: return "StabilizerMismatch";
  case Errc::CorrespondenceViolation: return "CorrespondenceViolation";
  case Errc::IdentityViolation: return "IdentityViolation";
  case Errc::RecoveryInconsistent: return "RecoveryInconsistent";
  case Errc::IrrationalRoots: return "IrrationalRoots";
  case Errc::SingularSystem: return "SingularSystem";
  case Errc::NotRealizable: return "NotRealizable";
  }
  return "Unknown";
}

} // namespace tenfold
