#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace ppart {

// Exact rational arithmetic for the linear-algebra checks (rank counts,
// basis expansions).  Polynomial coefficients elsewhere stay on checked
// 64-bit integers; these solvers must never overflow, hence bignum.
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

// Rank by fraction-full Gaussian elimination.
int matrix_rank(Matrix a);

// PLU factorization of a square matrix for repeated exact solves.
// Throws std::domain_error if the matrix is singular.
class LinearSolver {
 public:
  explicit LinearSolver(Matrix a);

  int dimension() const { return n_; }
  std::vector<Rational> solve(std::vector<Rational> rhs) const;

 private:
  int n_;
  Matrix lu_;              // L below the diagonal (unit diagonal implied), U on/above
  std::vector<int> perm_;  // row permutation applied to inputs
};

}  // namespace ppart
