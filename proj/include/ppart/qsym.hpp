#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppart/algebra.hpp"
#include "ppart/combinatorics.hpp"
#include "ppart/posets.hpp"
#include "ppart/report.hpp"

namespace ppart {

// Quasi-symmetric function in monomial-basis coordinates.
struct QSymElem {
  std::map<Composition, long long> coeffs;  // nonzero entries only

  long long coeff(const Composition& I) const;
  void add(const Composition& I, long long c);
  bool is_zero() const { return coeffs.empty(); }
  int max_weight() const;

  bool operator==(const QSymElem&) const = default;

  std::string to_string() const;  // "M(2) + M(1,1)"
};

// Evaluation of a quasi-symmetric function on the signed alphabet with
// 2m+1 letters: a polynomial in x_1..x_{2m+1}.
struct VirtualEval {
  int m = 0;
  CPoly value;

  VirtualEval() = default;
  VirtualEval(int m_, CPoly v);  // checks the variable range

  bool operator==(const VirtualEval&) const = default;
};

// Truncation of the monomial basis element M_I to x_1..x_N:
// sum over 1 <= a_1 < ... < a_r <= N of x_{a_1}^{i_1} ... x_{a_r}^{i_r}.
// Zero when N < length(I); M_() = 1.
CPoly monomial_M(const Composition& I, int N);

// Generating series of the order-condition maps of P with values <= N.
CPoly F_P(const RankedPoset& P, int N);

// Same sum with separate value bounds on even- and odd-height elements;
// this is the truncation that matches the two-alphabet series level by
// level.
CPoly F_P_value_bounded(const RankedPoset& P, int max_even, int max_odd);

// M-basis expansion of a truncated quasi-symmetric polynomial in
// x_1..x_N.  Candidate coefficients are read off the monomials supported
// on initial variables, then the whole truncation is rebuilt and
// compared; mismatch throws std::domain_error("not quasi-symmetric").
// Requires total degree <= N so the truncation is faithful.
QSymElem qsym_expand(const CPoly& f, int N);

// Ordered product over j = 1..2m+1 of sigma_{x_j}^{(-1)^j}, truncated at
// weight cap.  The S^I coefficients of this series are the virtual
// monomial evaluations; results are cached per (m, cap).
const SymSeries& virtual_series(int m, int cap);

VirtualEval monomial_M_virtual(const Composition& I, int m);

// Linear extension of the virtual evaluation to any element of QSym.
VirtualEval eval_virtual(const QSymElem& F, int m);

// Direct summation formulas for compositions of length <= 3, used as an
// independent cross-check of the series computation:
//   (k):      sum_j (-1)^j x_j^k
//   (k,l):    sum_{j odd} x_j^{k+l} + sum_{s<t} (-1)^{s+t} x_s^k x_t^l
//   (k,l,n):  -sum_{j odd} x_j^{k+l+n} + sum_{s<t, t odd} (-1)^s x_s^k x_t^{l+n}
//             + sum_{s odd, s<t} (-1)^t x_s^{k+l} x_t^n
//             + sum_{s<t<u} (-1)^{s+t+u} x_s^k x_t^l x_u^n
CPoly monomial_M_virtual_direct(const Composition& I, int m);

// Sets x_1 = x_3 = ... = x_{2m+1} = 0; the result lives in the
// even-indexed variables.
CPoly kill_odd_variables(const VirtualEval& v);

// The linear change to the two-alphabet variables:
//   x_{2i+1} = q_{i+1}+...+q_m + p_{i+1}+...+p_{m+1}
//   x_{2i}   = q_i+...+q_m + p_{i+1}+...+p_{m+1}
CPoly substitute_x_to_pq(const VirtualEval& v);

// Checks the merge equation on a family (f_m)_{m=0..M} of polynomials,
// f_m in x_1..x_{2m+1}: substituting x_{i+1} = x_i into f_m must equal
// f_{m-1} with its variables re-embedded around the removed pair, for
// every m >= 1 and 1 <= i <= 2m; plus the stability rows
// f_{m+1}(..., 0, 0) = f_m.
CheckReport check_Sx_membership(const std::vector<CPoly>& family);

// Exact equality of the level-m two-alphabet series of P with the signed
// virtual evaluation of its one-alphabet series, routed through the
// M-basis expansion.
bool verify_main_theorem(const RankedPoset& P, int m);

}  // namespace ppart
