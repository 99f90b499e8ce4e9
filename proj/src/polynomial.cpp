#include "ecrank/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ecrank/error.hpp"

namespace ecrank {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b over Q.
QPoly remainder(QPoly a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<QPoly> sturm_chain(const IntPoly& poly) {
  std::vector<QPoly> chain;
  QPoly p0(poly.coefficients().begin(), poly.coefficients().end());
  const IntPoly d = poly.derivative();
  QPoly p1(d.coefficients().begin(), d.coefficients().end());
  chain.push_back(std::move(p0));
  if (p1.empty()) return chain;
  chain.push_back(std::move(p1));
  for (;;) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

mpq_class half_above(const mpz_class& k) { return mpq_class(2 * k + 1, 2); }

// Integer roots r with lo < r <= hi, given that the chain counts `count`
// distinct real roots in (lo + 1/2, hi + 1/2].
void bisect(const IntPoly& poly, const std::vector<QPoly>& chain, const mpz_class& lo,
            std::size_t v_lo, const mpz_class& hi, std::size_t v_hi,
            std::vector<mpz_class>& out) {
  if (v_lo == v_hi) return;
  if (hi - lo == 1) {
    if (poly(hi) == 0) out.push_back(hi);
    return;
  }
  mpz_class mid = lo + (hi - lo) / 2;
  const std::size_t v_mid = sign_variations(chain, half_above(mid));
  bisect(poly, chain, lo, v_lo, mid, v_mid, out);
  bisect(poly, chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> low_to_high) : coeffs_(std::move(low_to_high)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> low_to_high) {
  for (long c : low_to_high) coeffs_.emplace_back(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * i);
  return IntPoly(std::move(d));
}

std::string to_string(const IntPoly& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly.degree(); i >= 0; --i) {
    const mpz_class& c = poly.coefficients()[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

mpz_class cauchy_root_bound(const IntPoly& poly) {
  if (poly.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no root bound");
  mpz_class top = 0;
  for (int i = 0; i < poly.degree(); ++i) {
    if (abs(poly.coefficients()[i]) > top) top = abs(poly.coefficients()[i]);
  }
  mpz_class lead = abs(poly.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
  return 1 + q;
}

std::size_t count_real_roots(const IntPoly& poly, const mpq_class& lo, const mpq_class& hi) {
  if (poly.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "empty interval");
  const auto chain = sturm_chain(poly);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

// Integer roots of a monic polynomial; half-integer endpoints are never roots.
std::vector<mpz_class> monic_integer_roots(const IntPoly& poly) {
  std::vector<mpz_class> out;
  if (poly.degree() == 0) return out;
  const auto chain = sturm_chain(poly);
  const mpz_class bound = cauchy_root_bound(poly);
  const mpz_class lo = -bound - 1;
  const mpz_class hi = bound;
  bisect(poly, chain, lo, sign_variations(chain, half_above(lo)), hi,
         sign_variations(chain, half_above(hi)), out);
  return out;
}

}  // namespace

std::vector<mpz_class> integer_roots(const IntPoly& poly) {
  if (poly.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has every root");
  std::vector<mpz_class> out;
  for (const auto& r : rational_roots(poly)) {
    if (r.get_den() == 1) out.push_back(r.get_num());
  }
  return out;
}

std::vector<mpq_class> rational_roots(const IntPoly& poly) {
  if (poly.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has every root");
  const int n = poly.degree();
  const mpz_class& lead = poly.leading();
  // lead^(n-1) * f(z / lead) = z^n + c_{n-1} z^{n-1} + c_{n-2} lead z^{n-2} + ...
  std::vector<mpz_class> monic(n + 1);
  mpz_class scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    monic[i] = poly.coefficients()[i] * scale;
    scale *= lead;
  }
  monic[n] = 1;
  std::vector<mpq_class> out;
  for (const auto& z : monic_integer_roots(IntPoly(std::move(monic)))) {
    mpq_class x(z, lead);
    x.canonicalize();
    if (poly(x) != 0) throw Error(Errc::Internal, "rational root failed verification");
    out.push_back(x);
  }
  // Negative leading coefficients reverse the order of z / lead.
  if (lead < 0) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ecrank
