#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ecrank {

/// -16(4a^3 + 27b^2). Zero is a legal result here; CurveQ rejects it.
mpz_class discriminant(const mpz_class& a, const mpz_class& b);

/// y^2 = x^3 + a x + b with integer coefficients and nonzero discriminant.
class CurveQ {
 public:
  /// Throws Error(SingularCurve) when the discriminant vanishes.
  CurveQ(mpz_class a, mpz_class b);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& discriminant() const { return disc_; }

  /// x^3 + a x + b
  mpq_class rhs(const mpq_class& x) const { return x * x * x + a_ * x + b_; }

  friend bool operator==(const CurveQ& l, const CurveQ& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  mpz_class a_;
  mpz_class b_;
  mpz_class disc_;
};

/// Affine rational point or the point at infinity. Coordinates are kept in
/// lowest terms with positive denominators, so equality is structural.
class PointQ {
 public:
  static PointQ identity() { return PointQ(); }
  PointQ(mpq_class x, mpq_class y);

  bool is_identity() const { return identity_; }
  const mpq_class& x() const { return x_; }
  const mpq_class& y() const { return y_; }

  bool is_integral() const;

  friend bool operator==(const PointQ& l, const PointQ& r) {
    if (l.identity_ || r.identity_) return l.identity_ == r.identity_;
    return l.x_ == r.x_ && l.y_ == r.y_;
  }

  /// Identity first, then by (x, y).
  friend bool operator<(const PointQ& l, const PointQ& r);

 private:
  PointQ() = default;

  bool identity_ = true;
  mpq_class x_;
  mpq_class y_;
};

std::string to_string(const PointQ& p);
std::ostream& operator<<(std::ostream& os, const PointQ& p);

bool is_on_curve(const CurveQ& curve, const PointQ& p);

PointQ negate(const PointQ& p);

PointQ add(const CurveQ& curve, const PointQ& p, const PointQ& q);

/// Tangent doubling, x' = (x^4 - 2a x^2 - 8b x + a^2) / (4 y^2).
PointQ double_point(const CurveQ& curve, const PointQ& p);

PointQ scalar_mul(const CurveQ& curve, std::int64_t n, const PointQ& p);

/// max(|num(x)|, den(x)); 0 for the identity.
mpz_class naive_height(const PointQ& p);

}  // namespace ecrank
