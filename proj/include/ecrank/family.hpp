#pragma once

#include <cstdint>

#include "ecrank/weierstrass.hpp"

namespace ecrank {

/// Hypotheses under which C_m is claimed to have trivial torsion and rank >= 2.
/// Always recomputed from (m, p, q).
struct FamilyFlags {
  bool m_not_0_mod_4 = false;
  bool m_2_mod_64 = false;
  bool p_ne_q = false;
  bool p_ndiv_m = false;
  bool q_ndiv_m = false;

  bool all() const { return m_not_0_mod_4 && m_2_mod_64 && p_ne_q && p_ndiv_m && q_ndiv_m; }

  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

FamilyFlags compute_flags(std::uint64_t m, std::uint64_t p, std::uint64_t q);

struct FamilyParams {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  FamilyFlags flags;

  bool hypotheses_met() const { return flags.all(); }
  std::uint64_t pq() const { return p * q; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// C_m : y^2 = x^3 - m^2 x + p^2 q^2
struct Family {
  FamilyParams params;
  CurveQ curve;
};

/// Throws NonpositiveM, InvalidPrime (p or q not an odd prime) or EqualPrimes.
Family make_family(std::int64_t m, std::int64_t p, std::int64_t q);

struct MarkedPoints {
  PointQ a;   // (0, pq)
  PointQ b;   // (m, pq)
  PointQ ab;  // a + b = (-m, -pq)
};

MarkedPoints marked_points(const Family& family);

}  // namespace ecrank
