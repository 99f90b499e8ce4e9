#include "ecrank/weierstrass.hpp"

#include <ostream>

#include "ecrank/error.hpp"

namespace ecrank {

mpz_class discriminant(const mpz_class& a, const mpz_class& b) {
  return -16 * (4 * a * a * a + 27 * b * b);
}

CurveQ::CurveQ(mpz_class a, mpz_class b)
    : a_(std::move(a)), b_(std::move(b)), disc_(ecrank::discriminant(a_, b_)) {
  if (disc_ == 0) {
    throw Error(Errc::SingularCurve,
                "y^2 = x^3 + (" + a_.get_str() + ")x + (" + b_.get_str() + ") is singular");
  }
}

PointQ::PointQ(mpq_class x, mpq_class y) : identity_(false), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

bool PointQ::is_integral() const {
  return identity_ || (x_.get_den() == 1 && y_.get_den() == 1);
}

bool operator<(const PointQ& l, const PointQ& r) {
  if (l.identity_ || r.identity_) return l.identity_ && !r.identity_;
  if (l.x_ != r.x_) return l.x_ < r.x_;
  return l.y_ < r.y_;
}

std::string to_string(const PointQ& p) {
  if (p.is_identity()) return "O";
  return "(" + p.x().get_str() + ", " + p.y().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const PointQ& p) { return os << to_string(p); }

bool is_on_curve(const CurveQ& curve, const PointQ& p) {
  return p.is_identity() || p.y() * p.y() == curve.rhs(p.x());
}

PointQ negate(const PointQ& p) {
  if (p.is_identity()) return p;
  return PointQ(p.x(), -p.y());
}

PointQ double_point(const CurveQ& curve, const PointQ& p) {
  if (p.is_identity() || p.y() == 0) return PointQ::identity();
  const mpq_class& x = p.x();
  const mpq_class& y = p.y();
  const mpz_class& a = curve.a();
  const mpz_class& b = curve.b();
  const mpq_class x2 = x * x;
  mpq_class xd = (x2 * x2 - 2 * a * x2 - 8 * b * x + a * a) / (4 * y * y);
  const mpq_class slope = (3 * x2 + a) / (2 * y);
  mpq_class yd = slope * (x - xd) - y;
  return PointQ(std::move(xd), std::move(yd));
}

PointQ add(const CurveQ& curve, const PointQ& p, const PointQ& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return double_point(curve, p);
    return PointQ::identity();
  }
  const mpq_class slope = (q.y() - p.y()) / (q.x() - p.x());
  mpq_class x3 = slope * slope - p.x() - q.x();
  mpq_class y3 = slope * (p.x() - x3) - p.y();
  return PointQ(std::move(x3), std::move(y3));
}

PointQ scalar_mul(const CurveQ& curve, std::int64_t n, const PointQ& p) {
  PointQ base = n < 0 ? negate(p) : p;
  // Magnitude as unsigned so INT64_MIN is handled.
  std::uint64_t k = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  PointQ acc = PointQ::identity();
  while (k != 0) {
    if (k & 1) acc = add(curve, acc, base);
    k >>= 1;
    if (k != 0) base = double_point(curve, base);
  }
  return acc;
}

mpz_class naive_height(const PointQ& p) {
  if (p.is_identity()) return 0;
  mpz_class num = abs(p.x().get_num());
  const mpz_class& den = p.x().get_den();
  return num > den ? num : den;
}

}  // namespace ecrank
