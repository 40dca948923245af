#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppart/superqsym.hpp"

using namespace ppart;

namespace {

CPoly X(int i) { return CPoly::variable(xvar(i)); }
CPoly P1() { return CPoly::variable(pvar(1)); }
CPoly P2() { return CPoly::variable(pvar(2)); }
CPoly Q1() { return CPoly::variable(qvar(1)); }

const std::vector<std::pair<int, int>> kFig2Covers = {
    {2, 1}, {2, 5}, {3, 1}, {3, 5}, {1, 6}, {5, 6}, {6, 4}};

}  // namespace

TEST_CASE("two-alphabet series of small posets") {
  RankedPoset single(1, {});
  CHECK(N_P(single, 1).value == P1() + P2());
  CHECK(N_P(single, 0).value == P1());

  // chain 1 < 2: only r = (1,1) survives the level-1 truncation
  RankedPoset chain(2, {{1, 2}});
  CHECK(N_P(chain, 1).value == P1() * Q1());

  // odd-height elements force zero at level 0
  CHECK(N_P(chain, 0).value.is_zero());
}

TEST_CASE("two-alphabet series of the six-element example") {
  RankedPoset fig(6, kFig2Covers);
  BiPoly h = N_P(fig, 2);
  // minimal map e=f=g=h=1, i=j=2 gives p1^2 q1^2 p2 q2
  Monomial expected = Monomial::variable(pvar(1), 2) * Monomial::variable(qvar(1), 2) *
                      Monomial::variable(pvar(2), 1) * Monomial::variable(qvar(2), 1);
  CHECK(h.value.coeff(expected) == 1);
  // each monomial has three p's and three q's
  for (auto& [mono, c] : h.value.terms()) {
    int pdeg = 0, qdeg = 0;
    for (auto& [v, e] : mono.factors()) (v.family == Family::p ? pdeg : qdeg) += e;
    CHECK(pdeg == 3);
    CHECK(qdeg == 3);
  }
}

TEST_CASE("level variables are range-checked") {
  CHECK_THROWS_AS(BiPoly(0, Q1()), std::invalid_argument);
  CHECK_THROWS_AS(BiPoly(1, CPoly::variable(pvar(3))), std::invalid_argument);
  CHECK_NOTHROW(BiPoly(1, P1() * Q1()));
}

TEST_CASE("collapsing the two alphabets") {
  RankedPoset single(1, {});
  CHECK(collapse_to_x(N_P(single, 1)) == X(1) + X(2));
  CHECK(collapse_to_x(N_P(single, 1)) == F_P(single, 2));

  RankedPoset chain(2, {{1, 2}});
  CHECK(collapse_to_x(N_P(chain, 1)) == X(1) * X(1));
  CHECK(collapse_to_x(N_P(chain, 1)) == F_P_value_bounded(chain, 2, 1));

  CHECK(collapse_to_x(BiPoly(2, CPoly{})).is_zero());
}

TEST_CASE("collapse matches the value-bounded truncation everywhere") {
  for (int n = 1; n <= 4; ++n)
    for (auto& P : enumerate_ranked_posets(n))
      for (int m = 0; m <= 3; ++m)
        CHECK(collapse_to_x(N_P(P, m)) == F_P_value_bounded(P, m + 1, m));
}

TEST_CASE("stability of the two-alphabet series") {
  for (auto& P : enumerate_ranked_posets(3))
    for (int m = 0; m <= 2; ++m) {
      CPoly trimmed = N_P(P, m + 1).value.substitute(
          {{pvar(m + 2), CPoly{}}, {qvar(m + 1), CPoly{}}});
      CHECK(trimmed == N_P(P, m).value);
    }
}

TEST_CASE("every monomial containing q1 also contains p1") {
  for (int n = 1; n <= 4; ++n)
    for (auto& P : enumerate_ranked_posets(n))
      for (int m = 0; m <= 3; ++m) {
        BiPoly h = N_P(P, m);
        for (auto& [mono, c] : h.value.terms())
          if (mono.exponent(qvar(1)) > 0) CHECK(mono.exponent(pvar(1)) > 0);
      }
}

TEST_CASE("p/q functional equations hold for poset series") {
  for (int n = 1; n <= 3; ++n)
    for (auto& P : enumerate_ranked_posets(n)) {
      std::vector<BiPoly> family;
      for (int m = 0; m <= 3; ++m) family.push_back(N_P(P, m));
      CHECK(check_Spq_membership(family).all_ok());
    }
}

TEST_CASE("p/q checker: counterexample families") {
  // h_m = q_m: the q_m = 0 substitution gives 0, the re-embedded lower
  // level gives q_{m-1}; fails from level 2 on
  std::vector<BiPoly> qfam;
  qfam.push_back(BiPoly(0, CPoly{}));
  for (int m = 1; m <= 2; ++m) qfam.push_back(BiPoly(m, CPoly::variable(qvar(m))));
  CheckReport r = check_Spq_membership(qfam);
  CHECK(!r.all_ok());
  for (auto& cell : r.cells) {
    if (cell.m == 2 && cell.i == 2 && cell.kind == "q=0") CHECK(!cell.ok);
    if (cell.m == 1 && cell.kind == "q=0") CHECK(cell.ok);  // 0 on both sides
  }

  // h_m = p1 q1 with h_0 = 0: both level-1 cells pass, level 2 fails
  std::vector<BiPoly> pq;
  pq.push_back(BiPoly(0, CPoly{}));
  for (int m = 1; m <= 2; ++m) pq.push_back(BiPoly(m, P1() * Q1()));
  CheckReport r2 = check_Spq_membership(pq);
  for (auto& cell : r2.cells)
    if (cell.m == 1) CHECK(cell.ok);
  CHECK(!r2.all_ok());
}

TEST_CASE("inverse change of variables recovers the x polynomials") {
  for (int w = 0; w <= 3; ++w)
    for (auto& I : compositions_of(w)) {
      std::vector<VirtualEval> family;
      for (int m = 0; m <= 3; ++m) family.push_back(monomial_M_virtual(I, m));
      CheckReport r = verify_isomorphism_roundtrip(family);
      CHECK(r.all_ok());
    }
  // zero family passes too
  std::vector<VirtualEval> zero;
  for (int m = 0; m <= 2; ++m) zero.push_back(VirtualEval(m, CPoly{}));
  CHECK(verify_isomorphism_roundtrip(zero).all_ok());
}

TEST_CASE("merge bijection on small posets") {
  for (int n = 1; n <= 3; ++n)
    for (auto& P : enumerate_ranked_posets(n))
      for (int m = 1; m <= 3; ++m)
        for (int i = 1; i <= m; ++i) CHECK(check_i_avoiding_bijection(P, m, i));
  RankedPoset fig(6, kFig2Covers);
  CHECK(check_i_avoiding_bijection(fig, 2, 1));
  CHECK(check_i_avoiding_bijection(fig, 2, 2));
}
