#include "ecrank/two_descent.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

#include "ecrank/error.hpp"

namespace ecrank {

HalvingQuartic halving_quartic(const CurveQ& curve, const mpq_class& target_x) {
  // x(2Q) = (x^4 - 2a x^2 - 8b x + a^2) / (4(x^3 + a x + b)) = u / v, cleared.
  const mpz_class& a = curve.a();
  const mpz_class& b = curve.b();
  const mpz_class& u = target_x.get_num();
  const mpz_class& v = target_x.get_den();
  HalvingQuartic q;
  q.coeffs = {v, -4 * u, -2 * a * v, -(8 * b * v + 4 * a * u), a * a * v - 4 * b * u};
  q.target_x = target_x;
  return q;
}

std::vector<mpq_class> rational_roots(const HalvingQuartic& quartic) {
  return rational_roots(quartic.polynomial());
}

namespace {

bool rational_sqrt(const mpq_class& r, mpq_class& root) {
  if (r < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(sn, sd);
  return true;
}

}  // namespace

std::vector<PointQ> halve_point(const CurveQ& curve, const PointQ& target) {
  std::vector<PointQ> out;
  if (target.is_identity()) {
    out.push_back(PointQ::identity());
    for (auto& t : two_torsion_points(curve)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
  }
  for (const auto& x : rational_roots(halving_quartic(curve, target.x()))) {
    mpq_class y;
    if (!rational_sqrt(curve.rhs(x), y) || y == 0) continue;
    for (const auto& candidate : {PointQ(x, -y), PointQ(x, y)}) {
      if (double_point(curve, candidate) == target) out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_in_2E(const CurveQ& curve, const PointQ& target) {
  return !halve_point(curve, target).empty();
}

NonDoubleEvidence non_double_evidence(const CurveQ& curve, std::string label,
                                      const PointQ& target) {
  NonDoubleEvidence ev;
  ev.label = std::move(label);
  ev.target = target;
  ev.quartic = halving_quartic(curve, target.x());
  ev.roots = rational_roots(ev.quartic);
  ev.halves = halve_point(curve, target);
  return ev;
}

std::string RankCertificate::derivation() const {
  std::ostringstream os;
  os << "torsion " << torsion.structure << " (gcd of #E(F_p) = " << torsion.count_gcd << ")";
  os << "; A " << (a_not_double.holds() ? "not in" : "in") << " 2E(Q)";
  os << "; B " << (b_not_double.holds() ? "not in" : "in") << " 2E(Q)";
  os << "; A+B " << (ab_not_double.holds() ? "not in" : "in") << " 2E(Q)";
  if (all_facts_hold()) {
    os << ". With trivial torsion E(Q)/2E(Q) has order 2^r; the classes [O], [A], [B],"
          " [A+B] are pairwise distinct (a coincidence would put A, B or A+B in 2E(Q)),"
          " so they form a subgroup of order 4 and r >= 2.";
  } else if (torsion.holds()) {
    os << ". Torsion is trivial, so A = (0, pq) has infinite order and r >= 1.";
  }
  return os.str();
}

namespace {

struct Facts {
  Family family;
  TorsionEvidence torsion;
  NonDoubleEvidence a, b, ab;
};

Facts collect_facts(const FamilyParams& params, std::span<const std::uint64_t> primes) {
  Family family = make_family(static_cast<std::int64_t>(params.m),
                              static_cast<std::int64_t>(params.p),
                              static_cast<std::int64_t>(params.q));
  const CurveQ& curve = family.curve;
  const MarkedPoints marked = marked_points(family);

  auto a = std::async(std::launch::async, [&] { return non_double_evidence(curve, "A", marked.a); });
  auto b = std::async(std::launch::async, [&] { return non_double_evidence(curve, "B", marked.b); });
  auto ab = std::async(std::launch::async, [&] { return non_double_evidence(curve, "A+B", marked.ab); });

  const TorsionReport report = torsion_subgroup(curve, primes);
  TorsionEvidence torsion;
  torsion.counts = report.divisor_bound.counts;
  torsion.count_gcd = report.divisor_bound.count_gcd;
  torsion.bound = report.divisor_bound.bound;
  torsion.structure = report.structure();

  // Join before `family` is moved: the tasks hold references into it.
  NonDoubleEvidence ea = a.get(), eb = b.get(), eab = ab.get();
  return Facts{std::move(family), std::move(torsion), std::move(ea), std::move(eb), std::move(eab)};
}

}  // namespace

RankCertificate rank2_certificate(const FamilyParams& family,
                                  std::span<const std::uint64_t> primes) {
  Facts facts = collect_facts(family, primes);
  RankCertificate cert;
  cert.family = facts.family.params;
  cert.primes.assign(primes.begin(), primes.end());
  cert.torsion = std::move(facts.torsion);
  cert.a_not_double = std::move(facts.a);
  cert.b_not_double = std::move(facts.b);
  cert.ab_not_double = std::move(facts.ab);
  cert.hypotheses_met = cert.family.hypotheses_met();
  cert.rank_lower_bound = cert.all_facts_hold() ? 2 : (cert.torsion.holds() ? 1 : 0);

  if (!cert.hypotheses_met) {
    cert.note = "outside stated hypotheses";
    return cert;
  }
  auto fail = [&](const std::string& fact) {
    throw Error(Errc::CertificateFailed, fact + " for (m, p, q) = (" +
                                             std::to_string(cert.family.m) + ", " +
                                             std::to_string(cert.family.p) + ", " +
                                             std::to_string(cert.family.q) + ")");
  };
  if (!cert.torsion.holds()) fail("torsion is " + cert.torsion.structure);
  if (!cert.a_not_double.holds()) fail("A is a double");
  if (!cert.b_not_double.holds()) fail("B is a double");
  if (!cert.ab_not_double.holds()) fail("A+B is a double");
  return cert;
}

std::string reverify(const RankCertificate& cert) {
  if (!(compute_flags(cert.family.m, cert.family.p, cert.family.q) == cert.family.flags)) {
    return "hypothesis flags do not match (m, p, q)";
  }
  if (cert.hypotheses_met != cert.family.hypotheses_met()) return "hypotheses_met mismatch";
  std::optional<Facts> fresh_facts;
  try {
    fresh_facts.emplace(collect_facts(cert.family, cert.primes));
  } catch (const Error& e) {
    return e.what();
  }
  const Facts& facts = *fresh_facts;
  const auto& t = facts.torsion;
  if (!(t.counts == cert.torsion.counts) || t.count_gcd != cert.torsion.count_gcd ||
      t.bound != cert.torsion.bound || t.structure != cert.torsion.structure) {
    return "torsion evidence differs";
  }
  const std::pair<const NonDoubleEvidence*, const NonDoubleEvidence*> pairs[] = {
      {&facts.a, &cert.a_not_double}, {&facts.b, &cert.b_not_double}, {&facts.ab, &cert.ab_not_double}};
  for (const auto& [fresh, stored] : pairs) {
    if (!(fresh->target == stored->target) || !(fresh->quartic == stored->quartic) ||
        fresh->roots != stored->roots || fresh->halves != stored->halves) {
      return "non-double evidence for " + stored->label + " differs";
    }
  }
  const int lb = cert.all_facts_hold() ? 2 : (cert.torsion.holds() ? 1 : 0);
  if (lb != cert.rank_lower_bound) return "rank_lower_bound inconsistent with the facts";
  return {};
}

}  // namespace ecrank
