#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ecrank {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exact below 2^64; above that falls back to GMP's BPSW-based test.
bool is_prime(const mpz_class& n);

using Factorization = std::vector<std::pair<mpz_class, unsigned>>;

/// Prime factorization of |n| (n != 0), primes ascending. Trial division
/// followed by Pollard-Brent on the cofactor.
Factorization factor(const mpz_class& n);

/// Positive divisors of |n|, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

/// All d > 0 with d^2 | n, ascending.
std::vector<mpz_class> square_divisor_roots(const mpz_class& n);

}  // namespace ecrank
