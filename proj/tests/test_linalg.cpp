#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppart/linalg.hpp"

using namespace ppart;

TEST_CASE("rank") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(matrix_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("exact solve") {
  LinearSolver s({{2, 1}, {1, 3}});
  auto x = s.solve({5, 10});
  CHECK(x[0] == 1);
  CHECK(x[1] == 3);

  // fractions survive exactly
  LinearSolver t({{2, 0}, {0, 4}});
  auto y = t.solve({1, 1});
  CHECK(y[0] == Rational(1, 2));
  CHECK(y[1] == Rational(1, 4));
}

TEST_CASE("pivoting and singularity") {
  LinearSolver s({{0, 1}, {1, 0}});
  auto x = s.solve({3, 7});
  CHECK(x[0] == 7);
  CHECK(x[1] == 3);
  CHECK_THROWS_AS(LinearSolver({{1, 1}, {1, 1}}), std::domain_error);
}

TEST_CASE("unimodular 0/1 system") {
  // rows: words 11, 12, 21 over the three degree-2 basis elements
  LinearSolver s({{1, 1, 1}, {1, 1, 0}, {1, 0, 1}});
  auto x = s.solve({1, 1, 1});
  CHECK(x[0] == 1);
  CHECK(x[1] == 0);
  CHECK(x[2] == 0);
}
