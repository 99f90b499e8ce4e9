#include "ecrank/primes.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ecrank/error.hpp"

namespace ecrank {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // The first twelve primes form a deterministic witness set below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8) {
    return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class c = seed;
  mpz_class y = 2 + seed;
  mpz_class g = 1, q = 1, x, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d;
  for (unsigned long seed = 1;; ++seed) {
    d = pollard_brent(n, seed);
    if (d != n) break;
  }
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

}  // namespace

Factorization factor(const mpz_class& n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor zero");
  mpz_class rest = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (mpz_class(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++found[mpz_class(p)];
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

namespace {

std::vector<mpz_class> expand(const Factorization& f, unsigned divide_exponent) {
  std::vector<mpz_class> out{1};
  for (const auto& [prime, exp] : f) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp / divide_exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<mpz_class> divisors(const mpz_class& n) { return expand(factor(n), 1); }

std::vector<mpz_class> square_divisor_roots(const mpz_class& n) {
  return expand(factor(n), 2);
}

}  // namespace ecrank
