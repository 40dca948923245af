#pragma once

#include <vector>

#include "ppart/algebra.hpp"
#include "ppart/posets.hpp"
#include "ppart/qsym.hpp"
#include "ppart/report.hpp"

namespace ppart {

// Level-m member of a two-alphabet stable sequence: a polynomial in
// p_1..p_{m+1}, q_1..q_m.
struct BiPoly {
  int m = 0;
  CPoly value;

  BiPoly() = default;
  BiPoly(int m_, CPoly v);  // checks the variable ranges

  bool operator==(const BiPoly&) const = default;
};

// Two-alphabet generating series of P at level m: order-condition maps
// take values in {1..m+1} with odd-height elements capped at m (the
// (m+1)-st q slot is zero); even-height elements contribute p_{r(v)},
// odd-height ones q_{r(v)}.
BiPoly N_P(const RankedPoset& P, int m);

// Sets p_i = q_i = x_i.  Matches F_P_value_bounded(P, m+1, m).
CPoly collapse_to_x(const BiPoly& h);

// Checks the two zero-substitution equations on a family (h_m)_{m=0..M}:
//   q_i = 0 merges the columns i, i+1 through p_i + p_{i+1};
//   p_i = 0 merges them through q_{i-1} + q_i, dropping the undefined
//   column when i = 1.
CheckReport check_Spq_membership(const std::vector<BiPoly>& family);

// Inverse change of variables: p_i = x_{2i-1} - x_{2i},
// q_i = x_{2i} - x_{2i+1}, p_{m+1} = x_{2m+1}.
CPoly substitute_pq_to_x(const BiPoly& h);

// Pushes a merge-equation family through the p/q change of variables,
// checks the image family against the zero-substitution equations, and
// checks that the inverse change recovers the input at every level.
CheckReport verify_isomorphism_roundtrip(const std::vector<VirtualEval>& family);

// Merge bijection underlying the q_i = 0 equation: on order maps at
// level m that avoid value i on odd-height elements, collapsing the
// values {i, i+1} is checked to reach every level-(m-1) order map, with
// the fibers exactly the predicted product sets and the fiber-summed
// monomials matching the merged variables.
bool check_i_avoiding_bijection(const RankedPoset& P, int m, int i);

}  // namespace ppart
