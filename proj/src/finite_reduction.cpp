#include "ecrank/finite_reduction.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <thread>
#include <vector>

#include "ecrank/error.hpp"
#include "ecrank/primes.hpp"

namespace ecrank {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  }
}

std::uint64_t residue(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse(std::uint64_t v, std::uint64_t p) { return powmod(v, p - 2, p); }

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

// Above this the x-range is split across worker threads.
constexpr std::uint64_t kParallelThreshold = 1u << 17;

}  // namespace

std::ostream& operator<<(std::ostream& os, const FpPoint& p) {
  if (p.infinity) return os << "O";
  return os << "(" << p.x << ", " << p.y << ")";
}

FiniteCurve make_finite_curve(std::uint64_t p, const mpz_class& a, const mpz_class& b) {
  require_odd_prime(p);
  if (p > kMaxFieldPrime) {
    throw Error(Errc::InvalidArgument,
                "prime " + std::to_string(p) + " exceeds the counting cap " +
                    std::to_string(kMaxFieldPrime));
  }
  if (mpz_divisible_ui_p(discriminant(a, b).get_mpz_t(), p)) {
    throw Error(Errc::BadReduction, std::to_string(p) + " divides the discriminant");
  }
  return FiniteCurve{p, residue(a, p), residue(b, p)};
}

bool has_good_reduction(const CurveQ& curve, std::uint64_t p) {
  require_odd_prime(p);
  return !mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), p);
}

FiniteCurve reduce_curve(const CurveQ& curve, std::uint64_t p) {
  return make_finite_curve(p, curve.a(), curve.b());
}

PointCount count_points(const FiniteCurve& fc) {
  const std::uint64_t p = fc.p;
  // roots[r] = number of y in F_p with y^2 = r.
  std::vector<std::uint8_t> roots(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++roots[y * y % p];

  auto affine_in = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t n = 0;
    for (std::uint64_t x = begin; x < end; ++x) {
      const std::uint64_t f = ((x * x % p + fc.a) % p * x + fc.b) % p;
      n += roots[f];
    }
    return n;
  };

  std::uint64_t affine = 0;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (p < kParallelThreshold || workers == 1) {
    affine = affine_in(0, p);
  } else {
    std::vector<std::future<std::uint64_t>> parts;
    const std::uint64_t chunk = (p + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < p; begin += chunk) {
      parts.push_back(std::async(std::launch::async, affine_in, begin, std::min(p, begin + chunk)));
    }
    for (auto& f : parts) affine += f.get();
  }

  const std::uint64_t order = affine + 1;
  const std::int64_t trace = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(order);
  if (static_cast<std::uint64_t>(trace * trace) > 4 * p) {
    throw Error(Errc::Internal, "Hasse bound violated over F_" + std::to_string(p));
  }
  return PointCount{p, order};
}

FpPoint reduce_point(const FiniteCurve& fc, const PointQ& point) {
  if (point.is_identity()) return FpPoint::identity();
  const auto& x = point.x();
  const auto& y = point.y();
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), fc.p) ||
      mpz_divisible_ui_p(y.get_den().get_mpz_t(), fc.p)) {
    throw Error(Errc::DenominatorDivisible,
                std::to_string(fc.p) + " divides a denominator of " + to_string(point));
  }
  const std::uint64_t xr =
      mulmod(residue(x.get_num(), fc.p), inverse(residue(x.get_den(), fc.p), fc.p), fc.p);
  const std::uint64_t yr =
      mulmod(residue(y.get_num(), fc.p), inverse(residue(y.get_den(), fc.p), fc.p), fc.p);
  return FpPoint::affine(xr, yr);
}

bool is_on_curve(const FiniteCurve& fc, const FpPoint& point) {
  if (point.infinity) return true;
  const std::uint64_t p = fc.p;
  const std::uint64_t x = point.x;
  return point.y * point.y % p == ((x * x % p + fc.a) % p * x + fc.b) % p;
}

FpPoint negate(const FiniteCurve& fc, const FpPoint& point) {
  if (point.infinity) return point;
  return FpPoint::affine(point.x, (fc.p - point.y) % fc.p);
}

FpPoint add(const FiniteCurve& fc, const FpPoint& p, const FpPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const std::uint64_t n = fc.p;
  std::uint64_t slope;
  if (p.x == q.x) {
    if ((p.y + q.y) % n == 0) return FpPoint::identity();
    slope = mulmod((3 * mulmod(p.x, p.x, n) + fc.a) % n, inverse(2 * p.y % n, n), n);
  } else {
    slope = mulmod(sub(q.y, p.y, n), inverse(sub(q.x, p.x, n), n), n);
  }
  const std::uint64_t x3 = sub(sub(mulmod(slope, slope, n), p.x, n), q.x, n);
  const std::uint64_t y3 = sub(mulmod(slope, sub(p.x, x3, n), n), p.y, n);
  return FpPoint::affine(x3, y3);
}

}  // namespace ecrank
