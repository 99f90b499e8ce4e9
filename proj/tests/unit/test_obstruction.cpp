#include <algorithm>

#include <gtest/gtest.h>

#include "ecrank/error.hpp"
#include "ecrank/obstruction.hpp"

namespace ecrank {
namespace {

using P = MultiPoly;

const ObstructionSpec& find_spec(const std::vector<ObstructionSpec>& all, const std::string& name) {
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.name == name; });
  if (it == all.end()) throw std::runtime_error("missing spec " + name);
  return *it;
}

ObstructionSpec single_var(std::uint64_t domain, P poly, std::uint64_t modulus,
                           Constraint c = Constraint::any()) {
  ObstructionSpec s;
  s.name = "t";
  s.variables = {Variable{"x", domain, c}};
  s.polynomial = std::move(poly);
  s.modulus = modulus;
  return s;
}

TEST(MultiPoly, Arithmetic) {
  const P x = P::variable(0), y = P::variable(1);
  EXPECT_EQ((x + 1).pow(2), x * x + 2 * x + 1);
  EXPECT_EQ((x - y) * (x + y), x.pow(2) - y.pow(2));
  EXPECT_EQ(-(x - 3), 3 - x);
  EXPECT_EQ((x * y - x * y).terms().size(), 0u);
  EXPECT_EQ((x.pow(3) - 7).constant_term(), -7);
  const std::vector<std::uint64_t> vals{5, 3};
  EXPECT_EQ((x.pow(2) * y - 200).eval_mod(vals, 7), ((75 - 200) % 7 + 7) % 7);
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ((2 * x * y - 1).to_string(names), "2*x*y - 1");
}

TEST(Constraint, Admits) {
  EXPECT_TRUE(Constraint::odd().admits(3));
  EXPECT_FALSE(Constraint::odd().admits(4));
  EXPECT_TRUE(Constraint::even().admits(0));
  EXPECT_TRUE(Constraint::congruent(2, 64).admits(66));
  EXPECT_FALSE(Constraint::congruent(2, 64).admits(3));
  EXPECT_TRUE(Constraint::coprime_to(6).admits(5));
  EXPECT_FALSE(Constraint::coprime_to(6).admits(9));
}

TEST(CheckObstruction, SanityCongruence) {
  const auto sols = check_obstruction(single_var(2, P::variable(0), 2));
  EXPECT_EQ(sols, (std::vector<Assignment>{{0}}));
  EXPECT_TRUE(check_obstruction(single_var(2, P::variable(0), 2, Constraint::odd())).empty());
}

TEST(CheckObstruction, SolutionsAreLexicographic) {
  ObstructionSpec s;
  s.name = "xy";
  s.variables = {Variable{"x", 4, {}}, Variable{"y", 4, {}}};
  s.polynomial = P::variable(0) * P::variable(1);
  s.modulus = 4;
  const auto sols = check_obstruction(s);
  EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
  EXPECT_EQ(sols.size(), 8u);  // x = 0 or y = 0: 7 pairs, plus (2, 2)
  EXPECT_EQ(sols.front(), (Assignment{0, 0}));
}

TEST(CheckObstruction, RelationsNarrowTheSolutionSet) {
  ObstructionSpec s = single_var(8, P::variable(0).pow(2) - 1, 8);
  EXPECT_EQ(check_obstruction(s).size(), 4u);
  s.relations = {P::variable(0) - 3};
  EXPECT_EQ(check_obstruction(s), (std::vector<Assignment>{{3}}));
}

TEST(CheckObstruction, BudgetAndShapeErrors) {
  auto code = [](const ObstructionSpec& s) {
    try {
      check_obstruction(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code(single_var(1u << 17, P::variable(0), 1u << 17)), Errc::BudgetExceeded);
  ObstructionSpec big;
  big.name = "big";
  for (int i = 0; i < 4; ++i) big.variables.push_back(Variable{"v", 256, {}});
  big.polynomial = P::variable(0);
  big.modulus = 256;
  EXPECT_EQ(code(big), Errc::BudgetExceeded);  // 256^4 > 10^8
  EXPECT_EQ(code(single_var(6, P::variable(0), 4)), Errc::InvalidArgument);
  EXPECT_EQ(code(single_var(4, P::variable(0), 4, Constraint::congruent(1, 8))),
            Errc::InvalidArgument);
  EXPECT_EQ(code(single_var(4, P::variable(0), 0)), Errc::InvalidArgument);
  EXPECT_EQ(code(single_var(4, P::variable(1), 4)), Errc::InvalidArgument);
  ObstructionSpec unbound_rel = single_var(4, P::variable(0), 4);
  unbound_rel.relations = {P::variable(2)};
  EXPECT_EQ(code(unbound_rel), Errc::InvalidArgument);
}

TEST(Corpus, EveryVerdictMatchesItsExpectation) {
  const auto all = builtin_obstructions();
  EXPECT_GE(all.size(), 8u);
  for (const auto& spec : all) {
    const auto sols = check_obstruction(spec);
    const bool empty = sols.empty();
    EXPECT_EQ(empty, spec.expected == Expectation::Empty) << spec.name;
    for (const auto& sol : sols) {
      ASSERT_EQ(spec.polynomial.eval_mod(sol, spec.modulus), 0u) << spec.name;
      for (std::size_t i = 0; i < sol.size(); ++i) {
        ASSERT_TRUE(spec.variables[i].constraint.admits(sol[i])) << spec.name;
      }
    }
  }
}

// Independent evaluation in plain 64-bit arithmetic.
TEST(Corpus, TerminalCongruencesByDirectEnumeration) {
  for (int k1 = 0; k1 < 6; ++k1) EXPECT_NE((2 * k1) % 6, 5);
  // A: k^8 + 1 + 2k^4 - k^2 p^2 q^2 mod 4 with k, p, q odd.
  for (long k = 1; k < 4; k += 2)
    for (long p = 1; p < 4; p += 2)
      for (long q = 1; q < 4; q += 2) {
        const long v = k * k * k * k * k * k * k * k + 1 + 2 * k * k * k * k - k * k * p * p * q * q;
        EXPECT_NE(((v % 4) + 4) % 4, 0);
      }
  // A+B: 2s^4 - 2p^2q^2 s - p^2q^2 mod 8.
  for (long s = 0; s < 8; ++s)
    for (long p = 1; p < 8; p += 2)
      for (long q = 1; q < 8; q += 2) {
        const long v = 2 * s * s * s * s - 2 * p * p * q * q * s - p * p * q * q;
        EXPECT_NE(((v % 8) + 8) % 8, 0);
      }
  // B: w^2 = 4s + 3m mod 4 with m = 2 mod 4, i.e. w^2 = 2 mod 4.
  for (long w = 0; w < 4; ++w) EXPECT_NE(w * w % 4, 2);
}

TEST(Corpus, LiteralMod12ReductionHasWitnessesWhenThreeDividesM) {
  const auto all = builtin_obstructions();
  const auto sols = check_obstruction(find_spec(all, "order3-x0mod4-mod12"));
  ASSERT_FALSE(sols.empty());
  for (const auto& sol : sols) EXPECT_EQ(sol[0] % 3, 1u);  // k1 = 1 mod 3 <=> 3 | 2 + 64k1
}

TEST(Corpus, MutantSurfacesWitnesses) {
  const auto all = builtin_obstructions();
  const ObstructionSpec mutant = mutate_constant(find_spec(all, "A-not-double-terminal"));
  EXPECT_EQ(mutant.expected, Expectation::Empty);
  EXPECT_NE(mutant.name, "A-not-double-terminal");
  EXPECT_FALSE(check_obstruction(mutant).empty());
}

TEST(Corpus, NamesAreUnique) {
  const auto all = builtin_obstructions();
  std::set<std::string> names;
  for (const auto& s : all) EXPECT_TRUE(names.insert(s.name).second) << s.name;
}

}  // namespace
}  // namespace ecrank
