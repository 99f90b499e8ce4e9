#include "ecrank/error.hpp"

namespace ecrank {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadReduction: return "BadReduction";
    case Errc::DenominatorDivisible: return "DenominatorDivisible";
    case Errc::NoUsablePrime: return "NoUsablePrime";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::EqualPrimes: return "EqualPrimes";
    case Errc::NonpositiveM: return "NonpositiveM";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ecrank
