#pragma once

#include <cstdint>
#include <iosfwd>

#include "ecrank/weierstrass.hpp"

namespace ecrank {

inline constexpr std::uint64_t kMaxFieldPrime = 1'000'000;

/// y^2 = x^3 + a x + b over F_p, p an odd prime of good reduction.
struct FiniteCurve {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const FiniteCurve&, const FiniteCurve&) = default;
};

/// #E(F_p), point at infinity included.
struct PointCount {
  std::uint64_t p = 0;
  std::uint64_t order = 0;

  friend bool operator==(const PointCount&, const PointCount&) = default;
};

struct FpPoint {
  bool infinity = true;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  static FpPoint identity() { return {}; }
  static FpPoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }

  friend bool operator==(const FpPoint&, const FpPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const FpPoint& p);

/// Validates p (odd prime, at most kMaxFieldPrime) and good reduction.
/// Coefficients may be any integers; they are reduced into [0, p).
FiniteCurve make_finite_curve(std::uint64_t p, const mpz_class& a, const mpz_class& b);

/// Throws NotPrime for anything but an odd prime.
bool has_good_reduction(const CurveQ& curve, std::uint64_t p);

/// Throws BadReduction when p divides the discriminant.
FiniteCurve reduce_curve(const CurveQ& curve, std::uint64_t p);

PointCount count_points(const FiniteCurve& fc);

/// Throws DenominatorDivisible if p divides a coordinate denominator.
FpPoint reduce_point(const FiniteCurve& fc, const PointQ& point);

bool is_on_curve(const FiniteCurve& fc, const FpPoint& point);
FpPoint negate(const FiniteCurve& fc, const FpPoint& point);
FpPoint add(const FiniteCurve& fc, const FpPoint& p, const FpPoint& q);

}  // namespace ecrank
