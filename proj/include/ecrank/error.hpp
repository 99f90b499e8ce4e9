#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecrank {

enum class Errc {
  SingularCurve,
  NotPrime,
  BadReduction,
  DenominatorDivisible,
  NoUsablePrime,
  InvalidPrime,
  EqualPrimes,
  NonpositiveM,
  BudgetExceeded,
  CertificateFailed,
  InvalidArgument,
  Internal,
};

std::string_view to_string(Errc code);

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ecrank
