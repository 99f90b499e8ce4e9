#include "ecrank/family.hpp"

#include "ecrank/error.hpp"
#include "ecrank/primes.hpp"

namespace ecrank {

FamilyFlags compute_flags(std::uint64_t m, std::uint64_t p, std::uint64_t q) {
  FamilyFlags f;
  f.m_not_0_mod_4 = m % 4 != 0;
  f.m_2_mod_64 = m % 64 == 2;
  f.p_ne_q = p != q;
  f.p_ndiv_m = p == 0 || m % p != 0;
  f.q_ndiv_m = q == 0 || m % q != 0;
  return f;
}

Family make_family(std::int64_t m, std::int64_t p, std::int64_t q) {
  if (m < 1) throw Error(Errc::NonpositiveM, "m must be positive, got " + std::to_string(m));
  for (std::int64_t r : {p, q}) {
    if (r < 3 || !is_prime(static_cast<std::uint64_t>(r))) {
      throw Error(Errc::InvalidPrime, std::to_string(r) + " is not an odd prime");
    }
  }
  if (p == q) throw Error(Errc::EqualPrimes, "p and q must be distinct");
  if (static_cast<unsigned __int128>(p) * static_cast<unsigned __int128>(q) > UINT64_MAX) {
    throw Error(Errc::InvalidArgument, "p*q overflows 64 bits");
  }

  FamilyParams params;
  params.m = static_cast<std::uint64_t>(m);
  params.p = static_cast<std::uint64_t>(p);
  params.q = static_cast<std::uint64_t>(q);
  params.flags = compute_flags(params.m, params.p, params.q);

  const mpz_class mz(static_cast<unsigned long>(params.m));
  const mpz_class pq(static_cast<unsigned long>(params.pq()));
  return Family{params, CurveQ(-mz * mz, pq * pq)};
}

MarkedPoints marked_points(const Family& family) {
  const mpq_class m(static_cast<unsigned long>(family.params.m));
  const mpq_class pq(static_cast<unsigned long>(family.params.pq()));
  MarkedPoints out{PointQ(0, pq), PointQ(m, pq), PointQ::identity()};
  out.ab = add(family.curve, out.a, out.b);
  if (!(out.ab == PointQ(-m, -pq))) {
    throw Error(Errc::Internal, "A + B = " + to_string(out.ab) + ", expected (-m, -pq)");
  }
  return out;
}

}  // namespace ecrank
