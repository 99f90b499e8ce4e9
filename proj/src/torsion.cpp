#include "ecrank/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "ecrank/error.hpp"
#include "ecrank/polynomial.hpp"
#include "ecrank/primes.hpp"

namespace ecrank {

const std::set<int>& mazur_allowed_orders() {
  static const std::set<int> orders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  return orders;
}

const std::set<int>& mazur_group_orders() {
  static const std::set<int> orders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16};
  return orders;
}

DivisorBound compute_divisor_bound(const CurveQ& curve, std::span<const std::uint64_t> primes) {
  DivisorBound out;
  for (std::uint64_t p : primes) {
    if (!has_good_reduction(curve, p)) {
      out.skipped.push_back(p);
      continue;
    }
    out.counts.push_back(count_points(reduce_curve(curve, p)));
    out.count_gcd = std::gcd(out.count_gcd, out.counts.back().order);
  }
  if (out.counts.empty()) {
    throw Error(Errc::NoUsablePrime, "no prime of good reduction supplied");
  }
  out.bound = 1;
  for (int n : mazur_group_orders()) {
    if (out.count_gcd % n == 0) out.bound = n;
  }
  return out;
}

std::uint64_t torsion_order_divisor_bound(const CurveQ& curve,
                                          std::span<const std::uint64_t> primes) {
  return compute_divisor_bound(curve, primes).bound;
}

std::vector<std::uint64_t> default_primes(const CurveQ& curve, std::size_t how_many) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; out.size() < how_many; p += 2) {
    if (is_prime(p) && has_good_reduction(curve, p)) out.push_back(p);
  }
  return out;
}

std::vector<PointQ> two_torsion_points(const CurveQ& curve) {
  // An integer root x of x^3 + a x + b divides b; b = 0 adds the root 0.
  std::vector<mpz_class> candidates;
  if (curve.b() == 0) {
    candidates.push_back(0);
    mpz_class s;
    mpz_class neg_a = -curve.a();
    if (neg_a > 0 && mpz_perfect_square_p(neg_a.get_mpz_t())) {
      mpz_sqrt(s.get_mpz_t(), neg_a.get_mpz_t());
      candidates.push_back(s);
      candidates.push_back(-s);
    }
  } else {
    for (const auto& d : divisors(curve.b())) {
      candidates.push_back(d);
      candidates.push_back(-d);
    }
  }
  std::vector<PointQ> out;
  for (const auto& x : candidates) {
    if (x * x * x + curve.a() * x + curve.b() == 0) out.emplace_back(mpq_class(x), mpq_class(0));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<mpz_class> three_torsion_roots(const CurveQ& curve) {
  const mpz_class& a = curve.a();
  const mpz_class& b = curve.b();
  return integer_roots(IntPoly({-a * a, 12 * b, 6 * a, 0, 3}));
}

std::vector<PointQ> nagell_lutz_candidates(const CurveQ& curve) {
  std::vector<PointQ> out = two_torsion_points(curve);
  for (const auto& y : square_divisor_roots(curve.discriminant())) {
    const mpz_class y2 = y * y;
    for (const auto& x : integer_roots(IntPoly({curve.b() - y2, curve.a(), 0, 1}))) {
      out.emplace_back(mpq_class(x), mpq_class(y));
      out.emplace_back(mpq_class(x), mpq_class(-y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> torsion_order(const CurveQ& curve, const PointQ& point, int cap) {
  PointQ multiple = point;
  for (int k = 1; k <= cap; ++k) {
    if (multiple.is_identity()) return k;
    if (!multiple.is_integral()) return std::nullopt;
    multiple = add(curve, multiple, point);
  }
  return std::nullopt;
}

std::string TorsionReport::structure() const {
  switch (shape) {
    case GroupShape::Trivial: return "trivial";
    case GroupShape::Cyclic: return "cyclic(" + std::to_string(cyclic_part) + ")";
    case GroupShape::Product: return "product(2," + std::to_string(cyclic_part) + ")";
  }
  return "unknown";
}

TorsionReport torsion_subgroup(const CurveQ& curve, std::span<const std::uint64_t> primes) {
  TorsionReport report;
  report.divisor_bound = compute_divisor_bound(curve, primes);
  if (report.divisor_bound.bound == 1) return report;

  const int cap = *mazur_allowed_orders().rbegin();
  int two_torsion = 0;
  int max_order = 1;
  for (const auto& candidate : nagell_lutz_candidates(curve)) {
    if (auto order = torsion_order(curve, candidate, cap)) {
      report.points.push_back({candidate, *order});
      if (*order == 2) ++two_torsion;
      max_order = std::max(max_order, *order);
    }
  }
  const int order = report.order();
  if (report.divisor_bound.count_gcd % order != 0 || !mazur_group_orders().contains(order)) {
    throw Error(Errc::Internal, "torsion order " + std::to_string(order) +
                                    " is inconsistent with the point counts");
  }
  if (order == 1) {
    report.shape = GroupShape::Trivial;
  } else if (two_torsion == 3) {
    report.shape = GroupShape::Product;
    report.cyclic_part = order / 2;
  } else {
    report.shape = GroupShape::Cyclic;
    report.cyclic_part = order;
    if (max_order != order) throw Error(Errc::Internal, "non-cyclic torsion without full 2-torsion");
  }
  return report;
}

}  // namespace ecrank
