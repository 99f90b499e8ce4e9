#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ecrank {

/// Sparse multivariate polynomial with integer coefficients. Exponent vectors
/// are padded to the larger arity when two polynomials are combined, so
/// constants mix freely with polynomials in any number of variables.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(std::size_t index);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(MultiPoly l, const MultiPoly& r) { return l *= r; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned e) const;

  /// Value modulo `modulus` (< 2^32) at the given residues.
  std::uint64_t eval_mod(std::span<const std::uint64_t> values, std::uint64_t modulus) const;

  mpz_class constant_term() const;
  void add_to_constant(long delta);

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void widen(std::size_t arity);
  void prune();

  std::size_t arity_ = 0;
  std::map<Exponents, mpz_class> terms_;
};

/// Residue condition on a single variable.
struct Constraint {
  enum class Kind { Any, Odd, Even, Congruent, CoprimeTo };
  Kind kind = Kind::Any;
  std::uint64_t modulus = 0;
  std::uint64_t residue = 0;

  static Constraint any() { return {}; }
  static Constraint odd() { return {Kind::Odd, 2, 1}; }
  static Constraint even() { return {Kind::Even, 2, 0}; }
  static Constraint congruent(std::uint64_t residue, std::uint64_t modulus) {
    return {Kind::Congruent, modulus, residue % modulus};
  }
  static Constraint coprime_to(std::uint64_t n) { return {Kind::CoprimeTo, n, 0}; }

  bool admits(std::uint64_t value) const;
  std::string describe() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A bound variable ranging over residues 0..domain-1. The domain must be a
/// multiple of the spec's modulus and of the constraint's modulus so every
/// residue class is represented exactly once.
struct Variable {
  std::string name;
  std::uint64_t domain = 0;
  Constraint constraint;
};

enum class Expectation {
  Empty,      // the congruence system has no solution
  Witnesses,  // solutions exist; kept to document where a reduction step leaks
};

inline constexpr std::uint64_t kMaxObstructionModulus = 1u << 16;
inline constexpr std::uint64_t kMaxObstructionSpace = 100'000'000;

/// polynomial ≡ 0 and every relation ≡ 0 (mod modulus), over the constrained
/// residues of the variables.
struct ObstructionSpec {
  std::string name;
  std::string lemma;
  std::string display;  // the congruence as written, for reports
  std::vector<Variable> variables;
  MultiPoly polynomial;
  std::vector<MultiPoly> relations;
  std::uint64_t modulus = 0;
  Expectation expected = Expectation::Empty;
  std::string note;

  /// Product of the variable domains.
  std::uint64_t search_space() const;
};

using Assignment = std::vector<std::uint64_t>;

/// All admissible residue tuples satisfying the system, in lexicographic
/// order. Throws BudgetExceeded when the modulus or the search space is over
/// budget, InvalidArgument for a malformed spec.
std::vector<Assignment> check_obstruction(const ObstructionSpec& spec);

/// One spec per displayed modular contradiction of the torsion and
/// non-doubleness arguments, plus the literal reductions they come from.
std::vector<ObstructionSpec> builtin_obstructions();

/// Copy of `spec` with `delta` added to the constant term, expectation kept.
/// A perturbed congruence should surface witnesses and fail its expectation.
ObstructionSpec mutate_constant(ObstructionSpec spec, long delta = 1);

std::string to_string(Expectation e);
std::string describe(const ObstructionSpec& spec);

}  // namespace ecrank
