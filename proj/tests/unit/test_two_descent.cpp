#include <random>

#include <gtest/gtest.h>

#include "ecrank/error.hpp"
#include "ecrank/family.hpp"
#include "ecrank/report.hpp"
#include "ecrank/torsion.hpp"
#include "ecrank/two_descent.hpp"
#include "oracles.hpp"

namespace ecrank {
namespace {

const CurveQ kE237(-4, 441);

std::array<mpz_class, 5> coeffs(long c4, long c3, long c2, long c1, long c0) {
  return {c4, c3, c2, c1, c0};
}

TEST(HalvingQuartic, IntegralTargets) {
  EXPECT_EQ(halving_quartic(kE237, 0).coeffs, coeffs(1, 0, 8, -3528, 16));
  EXPECT_EQ(halving_quartic(kE237, 2).coeffs, coeffs(1, -8, 8, -3496, -3512));
}

TEST(HalvingQuartic, RationalTargetIsScaledByDenominator) {
  const HalvingQuartic q = halving_quartic(kE237, mpq_class(4, 441));
  EXPECT_EQ(q.coeffs[0], 441);
  EXPECT_EQ(q.coeffs[1], -16);
}

TEST(HalvingQuartic, RootsAtHalves) {
  const PointQ b(2, 21);
  const PointQ t = double_point(kE237, b);
  const auto roots = rational_roots(halving_quartic(kE237, t.x()));
  EXPECT_NE(std::find(roots.begin(), roots.end(), mpq_class(2)), roots.end());
  EXPECT_TRUE(rational_roots(halving_quartic(kE237, 0)).empty());
  // (x - 1)^4
  HalvingQuartic fourfold;
  fourfold.coeffs = coeffs(1, -4, 6, -4, 1);
  EXPECT_EQ(rational_roots(fourfold), (std::vector<mpq_class>{1}));
}

TEST(Halving, GoldenCases) {
  const PointQ a(0, 21), b(2, 21), ab(-2, -21);
  EXPECT_EQ(halve_point(kE237, double_point(kE237, b)), (std::vector<PointQ>{b}));
  EXPECT_EQ(halve_point(kE237, PointQ::identity()), (std::vector<PointQ>{PointQ::identity()}));
  EXPECT_TRUE(halve_point(kE237, a).empty());
  EXPECT_FALSE(is_in_2E(kE237, b));
  EXPECT_FALSE(is_in_2E(kE237, ab));
  EXPECT_TRUE(is_in_2E(kE237, add(kE237, b, b)));
}

TEST(Halving, IdentityOnFullTwoTorsion) {
  const CurveQ e(-1, 0);
  EXPECT_EQ(halve_point(e, PointQ::identity()),
            (std::vector<PointQ>{PointQ::identity(), PointQ(-1, 0), PointQ(0, 0), PointQ(1, 0)}));
  // (0, 0) on y^2 = x^3 - x is not a double; on y^2 = x^3 + 4x, (2, 4) doubles to (0, 0).
  EXPECT_TRUE(halve_point(e, PointQ(0, 0)).empty());
  const CurveQ f(4, 0);
  EXPECT_EQ(halve_point(f, PointQ(0, 0)), (std::vector<PointQ>{PointQ(2, -4), PointQ(2, 4)}));
}

TEST(Halving, RoundTripOnFamilyCombinations) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const Family& fam : testing::sample_families()) {
    const MarkedPoints mp = marked_points(fam);
    std::vector<PointQ> qs{mp.a, negate(mp.a), mp.b, negate(mp.b), mp.ab, negate(mp.ab),
                           add(fam.curve, mp.a, mp.a)};
    for (int i = 0; i < 5; ++i) {
      qs.push_back(testing::combination(fam.curve, mp.a, mp.b, coef(rng), coef(rng)));
    }
    for (const PointQ& q : qs) {
      const PointQ t = double_point(fam.curve, q);
      const auto halves = halve_point(fam.curve, t);
      ASSERT_NE(std::find(halves.begin(), halves.end(), q), halves.end())
          << "m=" << fam.params.m << " Q=" << q;
      ASSERT_TRUE(std::is_sorted(halves.begin(), halves.end()));
      for (const PointQ& h : halves) ASSERT_EQ(double_point(fam.curve, h), t);
    }
  }
}

// y^2 = x^3 - m^2 x + (pq)^2 with odd p, q and any m: every half of an
// integral point has integral x of the same parity as m.
TEST(Halving, HalvesOfIntegralTargetsMatchParityOfM) {
  int doubles = 0;
  for (long m = 1; m <= 40; ++m) {
    for (long pq : {9L, 15L, 21L, 25L, 33L, 35L, 39L, 49L, 55L, 77L}) {
      const mpz_class a = -m * m, b = pq * pq;
      if (discriminant(a, b) == 0) continue;
      const CurveQ e(a, b);
      for (long x = -m; x <= 3000; ++x) {
        const mpz_class r = e.rhs(mpq_class(x)).get_num();
        if (r <= 0 || !mpz_perfect_square_p(r.get_mpz_t())) continue;
        mpz_class y;
        mpz_sqrt(y.get_mpz_t(), r.get_mpz_t());
        for (const PointQ& h : halve_point(e, PointQ(x, y))) {
          ++doubles;
          ASSERT_EQ(h.x().get_den(), 1) << m << " " << pq << " " << x;
          const mpz_class diff = h.x().get_num() - m;
          ASSERT_TRUE(mpz_even_p(diff.get_mpz_t())) << m << " " << pq << " " << x;
        }
      }
    }
  }
  EXPECT_GE(doubles, 20);
}

TEST(Certificate, GoldenFamilies) {
  const auto fam = make_family(2, 3, 7);
  const auto primes = default_primes(fam.curve);
  const RankCertificate c = rank2_certificate(fam.params, primes);
  EXPECT_EQ(c.rank_lower_bound, 2);
  EXPECT_TRUE(c.hypotheses_met);
  EXPECT_TRUE(c.all_facts_hold());
  EXPECT_EQ(c.torsion.structure, "trivial");
  // The stored evidence is the evidence for this curve, not a stale copy.
  EXPECT_EQ(c.a_not_double.quartic, halving_quartic(fam.curve, 0));
  EXPECT_EQ(c.b_not_double.quartic, halving_quartic(fam.curve, 2));
  EXPECT_EQ(c.ab_not_double.quartic, halving_quartic(fam.curve, -2));
  EXPECT_EQ(reverify(c), "");

  const auto f235 = make_family(2, 3, 5);
  EXPECT_EQ(rank2_certificate(f235.params, default_primes(f235.curve)).rank_lower_bound, 2);
}

TEST(Certificate, OutsideHypothesesIsTaggedNotThrown) {
  const auto fam = make_family(4, 3, 7);
  const RankCertificate c = rank2_certificate(fam.params, default_primes(fam.curve));
  EXPECT_FALSE(c.hypotheses_met);
  EXPECT_EQ(c.note, "outside stated hypotheses");
  EXPECT_EQ(reverify(c), "");
}

TEST(Certificate, ExplicitPrimesAreRecorded) {
  const auto fam = make_family(2, 3, 7);
  const std::vector<std::uint64_t> primes{5, 7};
  const RankCertificate c = rank2_certificate(fam.params, primes);
  EXPECT_EQ(c.primes, primes);
  EXPECT_EQ(c.torsion.count_gcd, 1u);
}

TEST(Certificate, JsonRoundTripReverifies) {
  for (const Family& fam : testing::sample_families()) {
    const RankCertificate c = rank2_certificate(fam.params, default_primes(fam.curve));
    const RankCertificate back = certificate_from_json(nlohmann::json::parse(to_json(c).dump()));
    ASSERT_EQ(back, c);
    ASSERT_EQ(reverify(back), "");
  }
}

TEST(Certificate, TamperedEvidenceIsDetected) {
  const auto fam = make_family(2, 3, 7);
  RankCertificate c = rank2_certificate(fam.params, default_primes(fam.curve));
  RankCertificate bad = c;
  bad.torsion.counts[0].order += 1;
  EXPECT_NE(reverify(bad), "");
  bad = c;
  bad.b_not_double.halves.push_back(PointQ(2, 21));
  EXPECT_NE(reverify(bad), "");
  bad = c;
  bad.rank_lower_bound = 1;
  EXPECT_NE(reverify(bad), "");
}

}  // namespace
}  // namespace ecrank
