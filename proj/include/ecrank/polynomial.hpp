#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ecrank {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> low_to_high);
  IntPoly(std::initializer_list<long> low_to_high);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class operator()(const mpz_class& x) const;
  mpq_class operator()(const mpq_class& x) const;

  IntPoly derivative() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

std::string to_string(const IntPoly& poly);

/// Every real root lies in [-B, B]: B = 1 + ceil(max |c_i| / |c_n|).
mpz_class cauchy_root_bound(const IntPoly& poly);

/// Number of distinct real roots in the half-open interval (lo, hi],
/// counted with a Sturm chain. Requires a nonzero polynomial and lo < hi.
std::size_t count_real_roots(const IntPoly& poly, const mpq_class& lo, const mpq_class& hi);

/// Distinct rational roots, ascending. Substituting x = z / c_n turns the
/// polynomial into a monic integer one in z, whose rational roots are
/// integers. Those are isolated by Sturm bisection on half-integer endpoints
/// (never roots of a monic integer polynomial) and every unit cell that still
/// holds a root is settled by exact evaluation.
std::vector<mpq_class> rational_roots(const IntPoly& poly);

/// Distinct integer roots, ascending.
std::vector<mpz_class> integer_roots(const IntPoly& poly);

}  // namespace ecrank
