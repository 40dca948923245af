#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ppart/algebra.hpp"

using namespace ppart;

namespace {

CPoly X(int i) { return CPoly::variable(xvar(i)); }

int rnd(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CPoly random_cpoly(std::mt19937_64& rng) {
  static const std::vector<VarName> vars = {xvar(1), xvar(2), pvar(1), qvar(2)};
  CPoly f;
  int terms = rnd(rng, 0, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<VarName, int>> factors;
    int deg = rnd(rng, 0, 3);
    for (int d = 0; d < deg; ++d) factors.push_back({vars[rnd(rng, 0, 3)], 1});
    f.add_term(Monomial::from_factors(std::move(factors)), rnd(rng, -4, 4));
  }
  return f;
}

NCPoly random_ncpoly(std::mt19937_64& rng) {
  static const std::vector<VarName> letters = {bvar(1), dvar(1), bvar(2)};
  NCPoly f;
  int terms = rnd(rng, 0, 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = rnd(rng, 0, 3);
    for (int i = 0; i < len; ++i) w.push_back(letters[rnd(rng, 0, 2)]);
    f.add_term(w, rnd(rng, -3, 3));
  }
  return f;
}

}  // namespace

TEST_CASE("variable order: b/d interleave, families otherwise by index") {
  CHECK(bvar(1) < dvar(1));
  CHECK(dvar(1) < bvar(2));
  CHECK(bvar(2) < dvar(2));
  CHECK(xvar(1) < xvar(2));
  CHECK(xvar(9) < pvar(1));
  CHECK(pvar(2) < qvar(1));
}

TEST_CASE("commutative arithmetic") {
  CHECK((X(1) + (-X(1))).is_zero());
  CHECK((X(1) + X(2)) * (X(1) + X(2)) ==
        X(1) * X(1) + CPoly{2} * X(1) * X(2) + X(2) * X(2));
  CPoly p1 = CPoly::variable(pvar(1)), p2 = CPoly::variable(pvar(2));
  CPoly q1 = CPoly::variable(qvar(1));
  CHECK((p1 + p2) * q1 == p1 * q1 + p2 * q1);
}

TEST_CASE("substitution") {
  CPoly f = X(1) * X(2);
  CHECK(f.substitute({{xvar(2), X(1)}}) == X(1) * X(1));

  // hand expansion of the m=1 change of variables on -x1 + x2 - x3
  CPoly q1 = CPoly::variable(qvar(1));
  CPoly p1 = CPoly::variable(pvar(1)), p2 = CPoly::variable(pvar(2));
  CPoly g = -X(1) + X(2) - X(3);
  CPoly image = g.substitute({{xvar(1), q1 + p1 + p2}, {xvar(2), q1 + p2}, {xvar(3), p2}});
  CHECK(image == -p1 - p2);

  CHECK(X(3).substitute({{xvar(3), CPoly{}}}).is_zero());
}

TEST_CASE("substitution is a ring morphism (seeded)") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    CPoly f = random_cpoly(rng), g = random_cpoly(rng);
    std::map<VarName, CPoly> a = {{xvar(1), random_cpoly(rng)}, {pvar(1), random_cpoly(rng)}};
    CHECK((f * g).substitute(a) == f.substitute(a) * g.substitute(a));
    CHECK((f + g).substitute(a) == f.substitute(a) + g.substitute(a));
  }
}

TEST_CASE("cpoly ring axioms (seeded)") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    CPoly a = random_cpoly(rng), b = random_cpoly(rng), c = random_cpoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("coefficient overflow is detected") {
  long long big = 3037000500LL;  // ~2^31.5, squares past 2^63
  CPoly f = CPoly::term(Monomial::variable(xvar(1)), big);
  CHECK_THROWS_AS(f * f, std::overflow_error);
}

TEST_CASE("noncommutative arithmetic") {
  NCPoly b1 = NCPoly::letter(bvar(1)), d1 = NCPoly::letter(dvar(1));
  CHECK(b1 * d1 == NCPoly::term({bvar(1), dvar(1)}, 1));
  CHECK(d1 * b1 == NCPoly::term({dvar(1), bvar(1)}, 1));
  CHECK(!(b1 * d1 == d1 * b1));

  NCPoly b2 = NCPoly::letter(bvar(2));
  CHECK((b1 + b2) * b1 == NCPoly::term({bvar(1), bvar(1)}, 1) + NCPoly::term({bvar(2), bvar(1)}, 1));

  NCPoly unit{1};
  CHECK(unit * b1 == b1);
  CHECK(b1 * unit == b1);
}

TEST_CASE("ncpoly ring axioms (seeded)") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    NCPoly a = random_ncpoly(rng), b = random_ncpoly(rng), c = random_ncpoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("letter substitution") {
  NCPoly f = NCPoly::term({avar(1), avar(2)}, 1);
  std::map<VarName, NCPoly> a = {{avar(1), NCPoly::letter(bvar(1)) + NCPoly::letter(dvar(1))},
                                 {avar(2), NCPoly::letter(bvar(1))}};
  CHECK(f.substitute_letters(a) ==
        NCPoly::term({bvar(1), bvar(1)}, 1) + NCPoly::term({dvar(1), bvar(1)}, 1));

  // substitution by zero kills every word containing the letter
  std::map<VarName, NCPoly> kill = {{avar(2), NCPoly{}}};
  CHECK(f.substitute_letters(kill).is_zero());
  NCPoly g = f + NCPoly::term({avar(1)}, 1);
  CHECK(g.substitute_letters(kill) == NCPoly::term({avar(1)}, 1));

  // nonlinear images are rejected
  std::map<VarName, NCPoly> bad = {{avar(1), NCPoly::term({bvar(1), bvar(1)}, 1)}};
  CHECK_THROWS_AS(f.substitute_letters(bad), std::invalid_argument);
}

TEST_CASE("letter substitution commutes with multiplication (seeded)") {
  std::mt19937_64 rng(17);
  std::map<VarName, NCPoly> a = {{bvar(1), NCPoly::letter(bvar(2)) + NCPoly::letter(dvar(2))},
                                 {dvar(1), NCPoly::letter(dvar(1))}};
  for (int t = 0; t < 40; ++t) {
    NCPoly f = random_ncpoly(rng), g = random_ncpoly(rng);
    CHECK((f * g).substitute_letters(a) ==
          f.substitute_letters(a) * g.substitute_letters(a));
  }
}

TEST_CASE("series: basis concatenation and truncation") {
  SymSeries s1(3);
  s1.add_term(Composition{std::vector<int>{1}}, CPoly{1});
  CHECK((s1 * s1).coeff(Composition{std::vector<int>{1, 1}}) == CPoly{1});

  SymSeries a = SymSeries::one(2), b = SymSeries::one(2);
  a.add_term(Composition{std::vector<int>{1}}, X(1));
  b.add_term(Composition{std::vector<int>{1}}, X(2));
  SymSeries prod = a * b;
  CHECK(prod.coeff(Composition{}) == CPoly{1});
  CHECK(prod.coeff(Composition{std::vector<int>{1}}) == X(1) + X(2));
  CHECK(prod.coeff(Composition{std::vector<int>{1, 1}}) == X(1) * X(2));

  // terms above the cap are dropped
  SymSeries t(1);
  t.add_term(Composition{std::vector<int>{2}}, CPoly{1});
  CHECK(t == SymSeries(1));
}

TEST_CASE("series inversion") {
  CHECK(SymSeries::one(3).inverse() == SymSeries::one(3));

  // frozen: (sigma_x at cap 2)^{-1} = 1 - x S(1) + x^2 S(1,1) - x^2 S(2)
  SymSeries sigma = SymSeries::sigma(X(1), 2);
  SymSeries inv = sigma.inverse();
  SymSeries expected = SymSeries::one(2);
  expected.add_term(Composition{std::vector<int>{1}}, -X(1));
  expected.add_term(Composition{std::vector<int>{1, 1}}, X(1) * X(1));
  expected.add_term(Composition{std::vector<int>{2}}, -(X(1) * X(1)));
  CHECK(inv == expected);
  CHECK(sigma * inv == SymSeries::one(2));
  CHECK(inv * sigma == SymSeries::one(2));
  CHECK(inv.inverse() == sigma);

  SymSeries bad(2);  // constant term 0
  CHECK_THROWS_AS(bad.inverse(), std::invalid_argument);
}

TEST_CASE("series inversion on random unit series (seeded)") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 15; ++t) {
    SymSeries s = SymSeries::one(5);
    int extra = rnd(rng, 1, 5);
    for (int e = 0; e < extra; ++e) {
      int w = rnd(rng, 1, 5);
      std::vector<int> parts;
      while (w > 0) {
        int part = rnd(rng, 1, w);
        parts.push_back(part);
        w -= part;
      }
      s.add_term(Composition{parts}, random_cpoly(rng));
    }
    SymSeries inv = s.inverse();
    CHECK(s * inv == SymSeries::one(5));
    CHECK(inv * s == SymSeries::one(5));
  }
}

TEST_CASE("sigma series shape") {
  CHECK(SymSeries::sigma(X(1), 0) == SymSeries::one(0));
  SymSeries s = SymSeries::sigma(X(1), 2);
  CHECK(s.coeff(Composition{}) == CPoly{1});
  CHECK(s.coeff(Composition{std::vector<int>{1}}) == X(1));
  CHECK(s.coeff(Composition{std::vector<int>{2}}) == X(1) * X(1));
  CHECK(s.coeff(Composition{std::vector<int>{1, 1}}).is_zero());
}

TEST_CASE("polynomial text form") {
  CPoly f = -X(1) * X(1) + CPoly{3} * X(2) - CPoly{2};
  CHECK(f.to_string() == "-2 + 3*x2 - x1^2");
  CHECK(CPoly{}.to_string() == "0");
}
