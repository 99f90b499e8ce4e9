#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ecrank/finite_reduction.hpp"
#include "ecrank/weierstrass.hpp"

namespace ecrank {

/// Orders a rational torsion point can have: {1, ..., 10, 12}.
const std::set<int>& mazur_allowed_orders();

/// Orders the whole rational torsion subgroup can have: the point orders
/// plus 16 from Z/2 x Z/8.
const std::set<int>& mazur_group_orders();

/// Point counts at the usable primes and what they imply for the torsion order.
struct DivisorBound {
  std::vector<PointCount> counts;  // good primes only, in input order
  std::vector<std::uint64_t> skipped;  // bad primes
  std::uint64_t count_gcd = 0;
  /// Largest allowed group order dividing count_gcd.
  std::uint64_t bound = 0;
};

/// Throws NoUsablePrime when every supplied prime is bad (or none given).
DivisorBound compute_divisor_bound(const CurveQ& curve, std::span<const std::uint64_t> primes);

std::uint64_t torsion_order_divisor_bound(const CurveQ& curve,
                                          std::span<const std::uint64_t> primes);

/// The first `how_many` odd primes >= 5 at which the curve has good reduction.
std::vector<std::uint64_t> default_primes(const CurveQ& curve, std::size_t how_many = 5);

/// Rational points (x, 0), found by searching the divisors of b.
std::vector<PointQ> two_torsion_points(const CurveQ& curve);

/// Integer roots of the 3-division polynomial 3x^4 + 6a x^2 + 12b x - a^2.
std::vector<mpz_class> three_torsion_roots(const CurveQ& curve);

/// Integral points with y = 0 or y^2 | discriminant, sorted by (x, y).
std::vector<PointQ> nagell_lutz_candidates(const CurveQ& curve);

/// Exact order of `point` if it is at most `cap`; nullopt otherwise, or as soon
/// as a non-integral multiple appears (such a point has infinite order).
std::optional<int> torsion_order(const CurveQ& curve, const PointQ& point, int cap = 12);

enum class GroupShape { Trivial, Cyclic, Product };

struct TorsionPoint {
  PointQ point;
  int order = 0;
};

struct TorsionReport {
  DivisorBound divisor_bound;
  std::vector<TorsionPoint> points;  // identity excluded, sorted by (x, y)
  GroupShape shape = GroupShape::Trivial;
  /// n for cyclic(n); 2k for product(2, 2k); 1 when trivial.
  int cyclic_part = 1;

  std::uint64_t order_bound() const { return divisor_bound.bound; }
  int order() const { return static_cast<int>(points.size()) + 1; }
  bool trivial() const { return shape == GroupShape::Trivial; }
  std::string structure() const;
};

TorsionReport torsion_subgroup(const CurveQ& curve, std::span<const std::uint64_t> primes);

}  // namespace ecrank
