#include "ecrank/obstruction.hpp"

namespace ecrank {

namespace {

using P = MultiPoly;

P var(std::size_t i) { return P::variable(i); }

Variable v(std::string name, std::uint64_t domain, Constraint c = Constraint::any()) {
  return Variable{std::move(name), domain, c};
}

// 3-torsion: x = 4k with m = 2 + 64k1 substituted into
// m^4 + 6m^2x^2 - 3x^4 - 12p^2q^2x = 0.
std::vector<ObstructionSpec> order_three() {
  std::vector<ObstructionSpec> out;

  {
    ObstructionSpec s;
    s.name = "order3-x0mod4-terminal";
    s.lemma = "no point of order 3: x ≡ 0 (mod 4)";
    s.display = "2k1 ≡ 5 (mod 6)";
    s.variables = {v("k1", 6)};
    s.polynomial = 2 * var(0) - 5;
    s.modulus = 6;
    out.push_back(std::move(s));
  }
  {
    const P k1 = var(0), k = var(1), p = var(2), q = var(3);
    const P m = 2 + 64 * k1;
    ObstructionSpec s;
    s.name = "order3-x0mod4-mod12";
    s.lemma = "no point of order 3: x ≡ 0 (mod 4)";
    s.display = "(2+64k1)^4 + 96k^2(2+64k1)^2 - 768k^4 - 48p^2q^2k ≡ 0 (mod 12)";
    s.variables = {v("k1", 12), v("k", 12), v("p", 12, Constraint::odd()),
                   v("q", 12, Constraint::odd())};
    s.polynomial = m.pow(4) + 96 * k.pow(2) * m.pow(2) - 768 * k.pow(4) - 48 * (p * q).pow(2) * k;
    s.modulus = 12;
    s.expected = Expectation::Witnesses;
    s.note = "solvable whenever k1 ≡ 1 (mod 3), i.e. 3 | m; only the terminal congruence "
             "2k1 ≡ 5 (mod 6) is empty";
    out.push_back(std::move(s));
  }
  {
    // (m^2 + 3x^2)^2 = 12x(x^3 + p^2q^2) with x = 2 + 4k, m = 2 + 64k1.
    const P k = var(0), k1 = var(1), p = var(2), q = var(3);
    const P x = 2 + 4 * k;
    const P m = 2 + 64 * k1;
    ObstructionSpec s;
    s.name = "order3-x2mod4-mod32";
    s.lemma = "no point of order 3: x ≡ 2 (mod 4)";
    s.display = "(m^2 + 3x^2)^2 - 12x(x^3 + p^2q^2) ≡ 0 (mod 32), x = 2+4k, m = 2+64k1";
    s.variables = {v("k", 32), v("k1", 32), v("p", 32, Constraint::odd()),
                   v("q", 32, Constraint::odd())};
    s.polynomial = (m.pow(2) + 3 * x.pow(2)).pow(2) - 12 * x * (x.pow(3) + (p * q).pow(2));
    s.modulus = 32;
    out.push_back(std::move(s));
  }
  {
    ObstructionSpec s;
    s.name = "order3-x2mod4-terminal";
    s.lemma = "no point of order 3: x ≡ 2 (mod 4)";
    s.display = "3(1+2k) ≡ 0 (mod 4)";
    s.variables = {v("k", 4)};
    s.polynomial = 3 * (1 + 2 * var(0));
    s.modulus = 4;
    out.push_back(std::move(s));
  }
  {
    // m = 3m1 ≡ 2 (mod 64) forces m1 ≡ 2 (mod 4); x = 27x2 odd forces x2 odd.
    const P m1 = var(0), x2 = var(1), p = var(2), q = var(3);
    ObstructionSpec s;
    s.name = "order3-n0mod3-mod8";
    s.lemma = "no point of order 3: 3 | n";
    s.display = "m1^4 + 2*3^5 m1^2 x2^2 - 3^9 x2^4 - 4p^2q^2 x2 ≡ 0 (mod 8)";
    s.variables = {v("m1", 8, Constraint::congruent(2, 4)), v("x2", 8, Constraint::odd()),
                   v("p", 8, Constraint::odd()), v("q", 8, Constraint::odd())};
    s.polynomial = m1.pow(4) + 486 * m1.pow(2) * x2.pow(2) - 19683 * x2.pow(4) -
                   4 * (p * q).pow(2) * x2;
    s.modulus = 8;
    out.push_back(std::move(s));
  }
  {
    ObstructionSpec s;
    s.name = "order3-n0mod3-terminal";
    s.lemma = "no point of order 3: 3 | n";
    s.display = "4x2 ≡ 5 (mod 8)";
    s.variables = {v("x2", 8)};
    s.polynomial = 4 * var(0) - 5;
    s.modulus = 8;
    out.push_back(std::move(s));
  }
  {
    const P alpha = var(0), p = var(1), q = var(2);
    ObstructionSpec s;
    s.name = "order3-case1";
    s.lemma = "no point of order 3: x = alpha^2, x^3 + p^2q^2 = 3 beta^2";
    s.display = "alpha^6 + p^2q^2 ≡ 0 (mod 3), 3 ∤ alpha";
    s.variables = {v("alpha", 3, Constraint::coprime_to(3)), v("p", 3), v("q", 3)};
    s.polynomial = alpha.pow(6) + (p * q).pow(2);
    s.modulus = 3;
    out.push_back(std::move(s));
  }
  {
    const P p = var(0), q = var(1);
    ObstructionSpec s;
    s.name = "order3-case2-p3";
    s.lemma = "no point of order 3: x = 3 alpha^2, x^3 + p^2q^2 = beta^2, 3 | p";
    s.display = "p^2q^2 ≡ 1 (mod 3), p ≡ 0 (mod 3)";
    s.variables = {v("p", 3, Constraint::congruent(0, 3)), v("q", 3)};
    s.polynomial = (p * q).pow(2) - 1;
    s.modulus = 3;
    out.push_back(std::move(s));
  }
  return out;
}

// Equation for x(4P) = x(-P) with the division by 4y^2 cleared:
// N^4 + 256 m^4 y^8 + 32 m^2 y^4 N^2 - 512 p^2q^2 y^6 N
//   = 16 x y^2 (-8y^4 - (3x^2 - m^2)(N - 4xy^2))^2,
// N = x^4 + m^4 + 2m^2x^2 - 8p^2q^2 x.
P order_five_equation(const P& x, const P& y, const P& m, const P& pq2) {
  const P n = x.pow(4) + m.pow(4) + 2 * m.pow(2) * x.pow(2) - 8 * pq2 * x;
  const P lhs = n.pow(4) + 256 * m.pow(4) * y.pow(8) + 32 * m.pow(2) * y.pow(4) * n.pow(2) -
                512 * pq2 * y.pow(6) * n;
  const P rhs =
      16 * x * y.pow(2) * (-8 * y.pow(4) - (3 * x.pow(2) - m.pow(2)) * (n - 4 * x * y.pow(2))).pow(2);
  return lhs - rhs;
}

std::vector<ObstructionSpec> order_five_and_seven() {
  std::vector<ObstructionSpec> out;
  {
    const P t = var(0);
    const P m = 2 + 64 * t;
    ObstructionSpec s;
    s.name = "order5-xodd-terminal";
    s.lemma = "no point of order 5: x odd";
    s.display = "(m^2+1)^8 ≡ 0 (mod 4), m = 2+64t";
    s.variables = {v("t", 4)};
    s.polynomial = (m.pow(2) + 1).pow(8);
    s.modulus = 4;
    out.push_back(std::move(s));
  }
  for (const bool x_odd : {true, false}) {
    const P x = var(0), y = var(1), m = var(2), p = var(3), q = var(4);
    const P pq2 = (p * q).pow(2);
    ObstructionSpec s;
    s.lemma = std::string("no point of order 5: x ") + (x_odd ? "odd" : "even");
    s.display = "x(4P) = x(-P) cleared of denominators, ≡ 0 (mod 4), with y^2 = x^3 - m^2x + p^2q^2";
    s.variables = {v("x", 4, x_odd ? Constraint::odd() : Constraint::even()), v("y", 4),
                   v("m", 4, Constraint::congruent(2, 4)), v("p", 4, Constraint::odd()),
                   v("q", 4, Constraint::odd())};
    s.polynomial = order_five_equation(x, y, m, pq2);
    s.relations = {y.pow(2) - (x.pow(3) - m.pow(2) * x + pq2)};
    s.modulus = 4;
    if (x_odd) {
      s.name = "order5-xodd-mod4";
    } else {
      s.name = "order5-xeven-mod4";
      s.expected = Expectation::Witnesses;
      s.note = "the mod-4 reading does not force m ≡ 0 (mod 4); m ≡ 2 (mod 4) also solves it. "
               "Order 5 is excluded by the reduction bound instead";
    }
    out.push_back(std::move(s));
  }
  {
    const P t = var(0);
    const P m = 2 + 64 * t;
    const P m2 = m.pow(2), m4 = m.pow(4);
    ObstructionSpec s;
    s.name = "order7-xodd-mod8";
    s.lemma = "no point of order 7: x odd";
    s.display = "(1+m^4)^8 [4(3-m^2)^2(1+m^4+2m^2)^3 + (1+m^4)^4] ≡ 0 (mod 8), m = 2+64t";
    s.variables = {v("t", 8)};
    s.polynomial = (1 + m4).pow(8) * (4 * (3 - m2).pow(2) * (1 + m4 + 2 * m2).pow(3) + (1 + m4).pow(4));
    s.modulus = 8;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ObstructionSpec> non_doubles() {
  std::vector<ObstructionSpec> out;
  {
    const P k = var(0), p = var(1), q = var(2);
    ObstructionSpec s;
    s.name = "A-not-double-terminal";
    s.lemma = "A = (0, pq) is not a double";
    s.display = "k^8 + 1 + 2k^4 - k^2p^2q^2 ≡ 0 (mod 4), k, p, q odd";
    s.variables = {v("k", 4, Constraint::odd()), v("p", 4, Constraint::odd()),
                   v("q", 4, Constraint::odd())};
    s.polynomial = k.pow(8) + 1 + 2 * k.pow(4) - k.pow(2) * (p * q).pow(2);
    s.modulus = 4;
    out.push_back(std::move(s));
  }
  {
    const P k = var(0), m = var(1), p = var(2), q = var(3);
    ObstructionSpec s;
    s.name = "A-not-double-mod64";
    s.lemma = "A = (0, pq) is not a double";
    s.display = "16k^8 + m^4 + 8k^4m^2 - 16k^2p^2q^2 ≡ 0 (mod 64), m ≡ 2 (mod 64), k odd";
    s.variables = {v("k", 64, Constraint::odd()), v("m", 64, Constraint::congruent(2, 64)),
                   v("p", 64, Constraint::odd()), v("q", 64, Constraint::odd())};
    s.polynomial = 16 * k.pow(8) + m.pow(4) + 8 * k.pow(4) * m.pow(2) - 16 * k.pow(2) * (p * q).pow(2);
    s.modulus = 64;
    out.push_back(std::move(s));
  }
  {
    const P w = var(0), s_ = var(1), m = var(2);
    ObstructionSpec s;
    s.name = "B-not-double-terminal";
    s.lemma = "B = (m, pq) is not a double";
    s.display = "w^2 ≡ 4s + 3m (mod 4), m ≡ 2 (mod 4)";
    s.variables = {v("w", 4), v("s", 4), v("m", 4, Constraint::congruent(2, 4))};
    s.polynomial = w.pow(2) - 4 * s_ - 3 * m;
    s.modulus = 4;
    out.push_back(std::move(s));
  }
  {
    const P s_ = var(0), p = var(1), q = var(2);
    ObstructionSpec s;
    s.name = "AB-not-double-terminal";
    s.lemma = "A+B = (-m, -pq) is not a double";
    s.display = "2s^4 - 2p^2q^2 s - p^2q^2 ≡ 0 (mod 8), p, q odd";
    s.variables = {v("s", 8), v("p", 8, Constraint::odd()), v("q", 8, Constraint::odd())};
    s.polynomial = 2 * s_.pow(4) - 2 * (p * q).pow(2) * s_ - (p * q).pow(2);
    s.modulus = 8;
    out.push_back(std::move(s));
  }
  {
    const P s_ = var(0), m = var(1), p = var(2), q = var(3);
    const P pq2 = (p * q).pow(2);
    ObstructionSpec s;
    s.name = "AB-not-double-mod16";
    s.lemma = "A+B = (-m, -pq) is not a double";
    s.display = "4s^4 + 16ms^3 + 20m^2s^2 + 8m^3s - 4p^2q^2s + m^4 - p^2q^2m ≡ 0 (mod 16), "
                "m ≡ 2 (mod 16)";
    s.variables = {v("s", 16), v("m", 16, Constraint::congruent(2, 16)),
                   v("p", 16, Constraint::odd()), v("q", 16, Constraint::odd())};
    s.polynomial = 4 * s_.pow(4) + 16 * m * s_.pow(3) + 20 * m.pow(2) * s_.pow(2) +
                   8 * m.pow(3) * s_ - 4 * pq2 * s_ + m.pow(4) - pq2 * m;
    s.modulus = 16;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<ObstructionSpec> builtin_obstructions() {
  std::vector<ObstructionSpec> out = order_three();
  for (auto& s : order_five_and_seven()) out.push_back(std::move(s));
  for (auto& s : non_doubles()) out.push_back(std::move(s));
  return out;
}

}  // namespace ecrank
