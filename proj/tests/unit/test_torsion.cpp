#include <gtest/gtest.h>

#include "ecrank/error.hpp"
#include "ecrank/finite_reduction.hpp"
#include "ecrank/primes.hpp"
#include "ecrank/torsion.hpp"
#include "oracles.hpp"

namespace ecrank {
namespace {

TEST(Mazur, AllowedOrders) {
  EXPECT_EQ(mazur_allowed_orders(), (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}));
  EXPECT_EQ(mazur_group_orders(), (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16}));
}

TEST(DivisorBound, FamilyCurveAtFiveAndSeven) {
  const CurveQ e(-4, 441);
  const std::vector<std::uint64_t> primes{5, 7};
  const DivisorBound db = compute_divisor_bound(e, primes);
  EXPECT_EQ(db.counts, (std::vector<PointCount>{{5, 9}, {7, 8}}));
  EXPECT_EQ(db.count_gcd, 1u);
  EXPECT_EQ(db.bound, 1u);
}

TEST(DivisorBound, FullTwoTorsionCurve) {
  const std::vector<std::uint64_t> primes{3, 5, 7};
  const auto bound = torsion_order_divisor_bound(CurveQ(-1, 0), primes);
  EXPECT_EQ(bound % 4, 0u);
}

TEST(DivisorBound, BadPrimesAreSkippedAndAllBadThrows) {
  const CurveQ e(0, 1);  // bad at 2 and 3
  const std::vector<std::uint64_t> mixed{3, 5, 7};
  const DivisorBound db = compute_divisor_bound(e, mixed);
  EXPECT_EQ(db.skipped, (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(db.count_gcd, 6u);
  const std::vector<std::uint64_t> bad{3};
  EXPECT_THROW(compute_divisor_bound(e, bad), Error);
  EXPECT_THROW(compute_divisor_bound(e, std::span<const std::uint64_t>{}), Error);
}

TEST(DivisorBound, DefaultPrimesAreGood) {
  const CurveQ e(-4, 441);  // discriminant -2^4 * 5250731
  const auto primes = default_primes(e);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{5, 7, 11, 13, 17}));
  for (auto p : default_primes(CurveQ(0, 1), 8)) EXPECT_TRUE(has_good_reduction(CurveQ(0, 1), p));
}

TEST(Torsion, TwoAndThreeDivisionPoints) {
  EXPECT_EQ(two_torsion_points(CurveQ(-1, 0)),
            (std::vector<PointQ>{PointQ(-1, 0), PointQ(0, 0), PointQ(1, 0)}));
  EXPECT_EQ(two_torsion_points(CurveQ(0, 1)), (std::vector<PointQ>{PointQ(-1, 0)}));
  EXPECT_TRUE(two_torsion_points(CurveQ(-4, 441)).empty());
  EXPECT_EQ(three_torsion_roots(CurveQ(0, 1)), (std::vector<mpz_class>{0}));
  EXPECT_EQ(three_torsion_roots(CurveQ(0, -432)), (std::vector<mpz_class>{0, 12}));
}

TEST(Torsion, NagellLutzCandidates) {
  EXPECT_EQ(nagell_lutz_candidates(CurveQ(0, 1)),
            (std::vector<PointQ>{PointQ(-1, 0), PointQ(0, -1), PointQ(0, 1), PointQ(2, -3),
                                 PointQ(2, 3)}));
}

TEST(Torsion, PointOrders) {
  const CurveQ e(0, 1);
  EXPECT_EQ(torsion_order(e, PointQ::identity()), 1);
  EXPECT_EQ(torsion_order(e, PointQ(-1, 0)), 2);
  EXPECT_EQ(torsion_order(e, PointQ(0, 1)), 3);
  EXPECT_EQ(torsion_order(e, PointQ(2, 3)), 6);
  EXPECT_EQ(torsion_order(CurveQ(-4, 441), PointQ(0, 21)), std::nullopt);
  EXPECT_EQ(torsion_order(e, PointQ(2, 3), 5), std::nullopt);
}

struct Expected {
  long a, b;
  const char* structure;
  int order;
};

class TorsionStructure : public ::testing::TestWithParam<Expected> {};

TEST_P(TorsionStructure, MatchesKnownGroup) {
  const auto& ex = GetParam();
  const CurveQ e(ex.a, ex.b);
  const TorsionReport r = torsion_subgroup(e, default_primes(e));
  EXPECT_EQ(r.structure(), ex.structure);
  EXPECT_EQ(r.order(), ex.order);
  for (const auto& tp : r.points) EXPECT_EQ(torsion_order(e, tp.point), tp.order);
}

INSTANTIATE_TEST_SUITE_P(KnownCurves, TorsionStructure,
                         ::testing::Values(Expected{-4, 441, "trivial", 1},
                                           Expected{1, 0, "cyclic(2)", 2},
                                           Expected{0, -432, "cyclic(3)", 3},
                                           Expected{4, 0, "cyclic(4)", 4},
                                           Expected{0, 1, "cyclic(6)", 6},
                                           Expected{-1, 0, "product(2,2)", 4}));

TEST(Torsion, InvariantUnderPrimeSetChoice) {
  const std::vector<std::uint64_t> small{5, 7, 11}, large{29, 31, 37, 41};
  for (const auto& [a, b] : {std::pair{-1L, 0L}, {0L, 1L}, {4L, 0L}, {-4L, 441L}}) {
    const CurveQ e(a, b);
    EXPECT_EQ(torsion_subgroup(e, small).structure(), torsion_subgroup(e, large).structure());
  }
}

TEST(Torsion, OrderDividesEveryGoodReductionCount) {
  for (const auto& [a, b] : {std::pair{-1L, 0L}, {0L, 1L}, {4L, 0L}, {0L, -432L}}) {
    const CurveQ e(a, b);
    const int order = torsion_subgroup(e, default_primes(e)).order();
    for (std::uint64_t p = 3; p <= 100; p += 2) {
      if (!is_prime(p) || !has_good_reduction(e, p)) continue;
      EXPECT_EQ(testing::brute_force_count(a, b, static_cast<std::int64_t>(p)) % order, 0u)
          << a << " " << b << " " << p;
    }
  }
}

TEST(Torsion, FamilyMembersHaveTrivialTorsion) {
  for (const Family& fam : testing::sample_families()) {
    EXPECT_TRUE(torsion_subgroup(fam.curve, default_primes(fam.curve)).trivial());
  }
}

}  // namespace
}  // namespace ecrank
