#include "ecrank/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ecrank/error.hpp"

namespace ecrank {

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_[{}] = constant;
}

MultiPoly MultiPoly::variable(std::size_t index) {
  MultiPoly out;
  out.arity_ = index + 1;
  Exponents e(index + 1, 0);
  e[index] = 1;
  out.terms_[e] = 1;
  return out;
}

void MultiPoly::widen(std::size_t arity) {
  if (arity <= arity_) return;
  std::map<Exponents, mpz_class> widened;
  for (auto& [e, c] : terms_) {
    Exponents w = e;
    w.resize(arity, 0);
    widened.emplace(std::move(w), std::move(c));
  }
  terms_ = std::move(widened);
  arity_ = arity;
}

void MultiPoly::prune() {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  MultiPoly r = rhs;
  widen(r.arity_);
  r.widen(arity_);
  for (const auto& [e, c] : r.terms_) terms_[e] += c;
  prune();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  MultiPoly r = rhs;
  widen(r.arity_);
  r.widen(arity_);
  std::map<Exponents, mpz_class> product;
  for (const auto& [el, cl] : terms_) {
    for (const auto& [er, cr] : r.terms_) {
      Exponents e(arity_);
      for (std::size_t i = 0; i < arity_; ++i) e[i] = el[i] + er[i];
      product[e] += cl * cr;
    }
  }
  terms_ = std::move(product);
  prune();
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::uint64_t MultiPoly::eval_mod(std::span<const std::uint64_t> values,
                                  std::uint64_t modulus) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class cr;
    mpz_fdiv_r_ui(cr.get_mpz_t(), c.get_mpz_t(), modulus);
    std::uint64_t term = cr.get_ui();
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      const std::uint64_t v = values[i] % modulus;
      for (unsigned k = 0; k < e[i]; ++k) term = term * v % modulus;
    }
    acc = (acc + term) % modulus;
  }
  return acc;
}

mpz_class MultiPoly::constant_term() const {
  const auto it = terms_.find(Exponents(arity_, 0));
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiPoly::add_to_constant(long delta) { *this += MultiPoly(delta); }

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const mpz_class mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k != 0; });
    if (mag != 1 || !has_vars) os << mag.get_str();
    bool first_factor = mag == 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool Constraint::admits(std::uint64_t value) const {
  switch (kind) {
    case Kind::Any: return true;
    case Kind::Odd: return value % 2 == 1;
    case Kind::Even: return value % 2 == 0;
    case Kind::Congruent: return value % modulus == residue;
    case Kind::CoprimeTo: return std::gcd(value, modulus) == 1;
  }
  return false;
}

std::string Constraint::describe() const {
  switch (kind) {
    case Kind::Any: return "any";
    case Kind::Odd: return "odd";
    case Kind::Even: return "even";
    case Kind::Congruent:
      return "≡ " + std::to_string(residue) + " mod " + std::to_string(modulus);
    case Kind::CoprimeTo: return "coprime to " + std::to_string(modulus);
  }
  return "?";
}

std::uint64_t ObstructionSpec::search_space() const {
  unsigned __int128 space = 1;
  for (const auto& v : variables) {
    space *= v.domain;
    if (space > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(space);
}

std::vector<Assignment> check_obstruction(const ObstructionSpec& spec) {
  if (spec.modulus == 0) throw Error(Errc::InvalidArgument, spec.name + ": modulus is 0");
  if (spec.modulus > kMaxObstructionModulus) {
    throw Error(Errc::BudgetExceeded, spec.name + ": modulus " + std::to_string(spec.modulus) +
                                          " exceeds 2^16");
  }
  if (spec.search_space() > kMaxObstructionSpace) {
    throw Error(Errc::BudgetExceeded, spec.name + ": residue space exceeds 10^8");
  }
  if (spec.polynomial.arity() > spec.variables.size()) {
    throw Error(Errc::InvalidArgument, spec.name + ": polynomial uses unbound variables");
  }
  for (const auto& rel : spec.relations) {
    if (rel.arity() > spec.variables.size()) {
      throw Error(Errc::InvalidArgument, spec.name + ": relation uses unbound variables");
    }
  }
  std::vector<std::vector<std::uint64_t>> admissible;
  for (const auto& v : spec.variables) {
    const std::uint64_t cm = v.constraint.modulus;
    if (v.domain == 0 || v.domain % spec.modulus != 0 || (cm != 0 && v.domain % cm != 0)) {
      throw Error(Errc::InvalidArgument,
                  spec.name + ": domain of " + v.name + " is not a common multiple of its moduli");
    }
    std::vector<std::uint64_t> values;
    for (std::uint64_t r = 0; r < v.domain; ++r) {
      if (v.constraint.admits(r)) values.push_back(r);
    }
    admissible.push_back(std::move(values));
  }

  std::vector<Assignment> solutions;
  for (const auto& values : admissible) {
    if (values.empty()) return solutions;
  }
  const std::size_t n = admissible.size();
  std::vector<std::size_t> index(n, 0);
  Assignment current(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) current[i] = admissible[i][index[i]];
    bool holds = spec.polynomial.eval_mod(current, spec.modulus) == 0;
    for (const auto& rel : spec.relations) {
      if (!holds) break;
      holds = rel.eval_mod(current, spec.modulus) == 0;
    }
    if (holds) solutions.push_back(current);
    // Odometer, last variable fastest, so output is lexicographic.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++index[i] < admissible[i].size()) break;
      index[i] = 0;
      if (i == 0) return solutions;
    }
    if (n == 0) return solutions;
  }
}

ObstructionSpec mutate_constant(ObstructionSpec spec, long delta) {
  spec.polynomial.add_to_constant(delta);
  spec.name += " (mutated)";
  spec.display += " [constant term shifted by " + std::to_string(delta) + "]";
  return spec;
}

std::string to_string(Expectation e) {
  return e == Expectation::Empty ? "empty" : "witnesses";
}

std::string describe(const ObstructionSpec& spec) {
  std::vector<std::string> names;
  for (const auto& v : spec.variables) names.push_back(v.name);
  std::ostringstream os;
  os << spec.name << " [" << spec.lemma << "]\n";
  os << "  congruence: " << spec.display << "\n";
  os << "  polynomial: " << spec.polynomial.to_string(names) << " ≡ 0 (mod " << spec.modulus
     << ")\n";
  for (const auto& rel : spec.relations) {
    os << "  relation:   " << rel.to_string(names) << " ≡ 0 (mod " << spec.modulus << ")\n";
  }
  os << "  variables: ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    const auto& v = spec.variables[i];
    os << (i ? ", " : "") << v.name << " mod " << v.domain << " (" << v.constraint.describe()
       << ")";
  }
  os << "\n  expected: " << to_string(spec.expected);
  if (!spec.note.empty()) os << "\n  note: " << spec.note;
  return os.str();
}

}  // namespace ecrank
