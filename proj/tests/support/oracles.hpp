#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ecrank/family.hpp"
#include "ecrank/weierstrass.hpp"

namespace ecrank::testing {

/// #E(F_p) by testing every (x, y) pair; O(p^2).
inline std::uint64_t brute_force_count(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::uint64_t n = 1;
  const std::int64_t ar = ((a % p) + p) % p;
  const std::int64_t br = ((b % p) + p) % p;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = ((x * x % p) * x % p + ar * x % p + br) % p;
    for (std::int64_t y = 0; y < p; ++y) {
      if (y * y % p == rhs) ++n;
    }
  }
  return n;
}

/// Doubling written the way the family's formula reads:
/// x' = (x^4 + m^4 + 2m^2x^2 - 8p^2q^2x) / 4y^2, y' = -y - (3x^2 - m^2)/(2y) (x' - x).
inline PointQ family_double(std::uint64_t m, std::uint64_t pq, const PointQ& pt) {
  const mpq_class mq(static_cast<unsigned long>(m));
  const mpq_class pq2 = mpq_class(static_cast<unsigned long>(pq)) * static_cast<unsigned long>(pq);
  const mpq_class& x = pt.x();
  const mpq_class& y = pt.y();
  const mpq_class m2 = mq * mq;
  mpq_class xd = (x * x * x * x + m2 * m2 + 2 * m2 * x * x - 8 * pq2 * x) / (4 * y * y);
  mpq_class yd = -y - (3 * x * x - m2) / (2 * y) * (xd - x);
  return PointQ(xd, yd);
}

/// i*A + j*B by repeated addition (no double-and-add).
inline PointQ combination(const CurveQ& curve, const PointQ& a, const PointQ& b, int i, int j) {
  PointQ acc = PointQ::identity();
  const PointQ sa = i < 0 ? negate(a) : a;
  const PointQ sb = j < 0 ? negate(b) : b;
  for (int k = 0; k < (i < 0 ? -i : i); ++k) acc = add(curve, acc, sa);
  for (int k = 0; k < (j < 0 ? -j : j); ++k) acc = add(curve, acc, sb);
  return acc;
}

/// True when no coordinate denominator of `pt` is divisible by p.
inline bool reducible_at(const PointQ& pt, std::uint64_t p) {
  if (pt.is_identity()) return true;
  return mpz_divisible_ui_p(pt.x().get_den_mpz_t(), p) == 0 &&
         mpz_divisible_ui_p(pt.y().get_den_mpz_t(), p) == 0;
}

/// Ten family members satisfying every hypothesis, drawn from the rank table.
inline std::vector<Family> sample_families() {
  const std::int64_t triples[][3] = {{2, 3, 7},    {2, 3, 11},   {194, 3, 11}, {2, 3, 13},
                                     {258, 5, 7},  {66, 5, 13},  {130, 7, 17}, {2, 13, 19},
                                     {194, 11, 19}, {258, 17, 19}};
  std::vector<Family> out;
  for (const auto& t : triples) out.push_back(make_family(t[0], t[1], t[2]));
  return out;
}

}  // namespace ecrank::testing
