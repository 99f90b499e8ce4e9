#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecrank/family.hpp"
#include "ecrank/polynomial.hpp"
#include "ecrank/torsion.hpp"
#include "ecrank/weierstrass.hpp"

namespace ecrank {

/// c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 whose roots are the x-coordinates of
/// the candidate halves of a point with x-coordinate target_x = u/v. For an
/// integral target the quartic is monic; otherwise every coefficient carries
/// the factor v.
struct HalvingQuartic {
  std::array<mpz_class, 5> coeffs;  // c4, c3, c2, c1, c0
  mpq_class target_x;

  IntPoly polynomial() const { return IntPoly({coeffs[4], coeffs[3], coeffs[2], coeffs[1], coeffs[0]}); }

  friend bool operator==(const HalvingQuartic&, const HalvingQuartic&) = default;
};

HalvingQuartic halving_quartic(const CurveQ& curve, const mpq_class& target_x);

std::vector<mpq_class> rational_roots(const HalvingQuartic& quartic);

/// Every rational Q with 2Q = target, sorted by (x, y). Halving the identity
/// yields the identity together with all rational 2-torsion points.
std::vector<PointQ> halve_point(const CurveQ& curve, const PointQ& target);

bool is_in_2E(const CurveQ& curve, const PointQ& target);

/// Evidence that `target` is not twice a rational point: the halving quartic,
/// all of its rational roots, and the (empty) list of verified halves.
struct NonDoubleEvidence {
  std::string label;
  PointQ target = PointQ::identity();
  HalvingQuartic quartic;
  std::vector<mpq_class> roots;
  std::vector<PointQ> halves;

  bool holds() const { return halves.empty(); }

  friend bool operator==(const NonDoubleEvidence&, const NonDoubleEvidence&) = default;
};

NonDoubleEvidence non_double_evidence(const CurveQ& curve, std::string label, const PointQ& target);

struct TorsionEvidence {
  std::vector<PointCount> counts;
  std::uint64_t count_gcd = 0;
  std::uint64_t bound = 0;
  std::string structure;

  bool holds() const { return structure == "trivial"; }

  friend bool operator==(const TorsionEvidence&, const TorsionEvidence&) = default;
};

/// Trivial torsion plus A, B, A+B outside 2E(Q): then {O, [A], [B], [A+B]} is
/// a subgroup of order 4 of E(Q)/2E(Q), which has order 2^rank.
struct RankCertificate {
  FamilyParams family;
  std::vector<std::uint64_t> primes;
  TorsionEvidence torsion;
  NonDoubleEvidence a_not_double;
  NonDoubleEvidence b_not_double;
  NonDoubleEvidence ab_not_double;
  /// 2 if every fact holds, 1 if only torsion triviality holds (A then has
  /// infinite order), 0 otherwise.
  int rank_lower_bound = 0;
  bool hypotheses_met = false;
  std::string note;

  bool all_facts_hold() const {
    return torsion.holds() && a_not_double.holds() && b_not_double.holds() &&
           ab_not_double.holds();
  }
  /// Human-readable account of how the facts combine.
  std::string derivation() const;

  friend bool operator==(const RankCertificate&, const RankCertificate&) = default;
};

/// Throws CertificateFailed naming the first failing fact when the family
/// meets its hypotheses; otherwise records the facts and tags the result
/// as outside the stated hypotheses.
RankCertificate rank2_certificate(const FamilyParams& family, std::span<const std::uint64_t> primes);

/// Re-runs every operation behind the certificate and compares verdicts and
/// evidence. Returns an empty string on agreement, else the first mismatch.
std::string reverify(const RankCertificate& cert);

}  // namespace ecrank
