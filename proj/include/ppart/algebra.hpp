#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppart/checked_arith.hpp"
#include "ppart/combinatorics.hpp"

namespace ppart {

// Variable families.  x carries quasi-symmetric truncations, p/q the
// two-alphabet series, a the noncommuting single alphabet, b/d the
// noncommuting pair.  b and d interleave in the total order
// (b1 < d1 < b2 < d2 < ...) so evaluation vectors of words compare
// lexicographically; the other families order by index.
enum class Family : std::uint8_t { x, p, q, a, b, d };

char family_char(Family f);
Family family_from_char(char c);  // throws on unknown letter

struct VarName {
  Family family{Family::x};
  int index{1};  // >= 1

  std::pair<int, long long> sort_key() const;

  friend bool operator==(const VarName& u, const VarName& v) {
    return u.family == v.family && u.index == v.index;
  }
  friend std::strong_ordering operator<=>(const VarName& u, const VarName& v) {
    return u.sort_key() <=> v.sort_key();
  }

  std::string to_string() const;  // "x3"
};

inline VarName xvar(int i) { return {Family::x, i}; }
inline VarName pvar(int i) { return {Family::p, i}; }
inline VarName qvar(int i) { return {Family::q, i}; }
inline VarName avar(int i) { return {Family::a, i}; }
inline VarName bvar(int i) { return {Family::b, i}; }
inline VarName dvar(int i) { return {Family::d, i}; }

// Sparse commutative monomial: sorted (variable, exponent) pairs,
// exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarName v, int exp = 1);
  static Monomial from_factors(std::vector<std::pair<VarName, int>> factors);

  const std::vector<std::pair<VarName, int>>& factors() const { return f_; }
  int degree() const { return deg_; }
  int exponent(VarName v) const;
  bool empty() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

  std::string to_string() const;  // "x1^2*x2", "1" for the empty monomial

 private:
  std::vector<std::pair<VarName, int>> f_;
  int deg_ = 0;
};

// Graded order: total degree first, then the factor lists
// lexicographically.  Used for canonical term iteration everywhere.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.factors() < b.factors();
  }
};

// Sparse exact-integer commutative polynomial.  No zero coefficients are
// stored; all arithmetic is overflow-checked.
class CPoly {
 public:
  CPoly() = default;
  CPoly(long long c);  // constant

  static CPoly variable(VarName v, int exp = 1);
  static CPoly term(const Monomial& m, long long c);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Monomial& m) const;
  long long constant_term() const { return coeff(Monomial{}); }
  const std::map<Monomial, long long, MonomialLess>& terms() const { return terms_; }

  int total_degree() const;  // 0 for the zero polynomial
  bool is_homogeneous(int* degree_out = nullptr) const;
  std::vector<VarName> variables() const;

  void add_term(const Monomial& m, long long c);

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly operator-() const;
  friend CPoly operator+(CPoly a, const CPoly& b) { a += b; return a; }
  friend CPoly operator-(CPoly a, const CPoly& b) { a -= b; return a; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  CPoly& operator*=(const CPoly& o) { *this = *this * o; return *this; }

  bool operator==(const CPoly&) const = default;

  // Ring morphism: assigned variables are replaced, all others are left
  // in place.
  CPoly substitute(const std::map<VarName, CPoly>& assignment) const;
  CPoly pow(int e) const;

  std::string to_string() const;

 private:
  std::map<Monomial, long long, MonomialLess> terms_;
};

using Word = std::vector<VarName>;  // empty word = unit monomial

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Exact-integer polynomial in noncommuting variables; multiplication
// concatenates words.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(long long c);  // multiple of the empty word

  static NCPoly letter(VarName v);
  static NCPoly term(const Word& w, long long c);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Word& w) const;
  const std::map<Word, long long, WordLess>& terms() const { return terms_; }

  int degree() const;  // longest word; 0 for the zero polynomial
  bool is_homogeneous(int* degree_out = nullptr) const;

  void add_term(const Word& w, long long c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  bool operator==(const NCPoly&) const = default;

  // Letter-by-letter substitution.  Every assigned image must be a sum of
  // single letters (or zero); anything else is rejected.
  NCPoly substitute_letters(const std::map<VarName, NCPoly>& assignment) const;

  std::string to_string() const;

 private:
  std::map<Word, long long, WordLess> terms_;
};

// Truncated series in the free algebra on S_1, S_2, ... with CPoly
// coefficients, keyed by the composition I of S^I = S_{i_1} ... S_{i_r}.
// Terms of weight above the cap are dropped by every operation.
class SymSeries {
 public:
  explicit SymSeries(int cap);

  static SymSeries one(int cap);
  // sigma_t = sum_{k <= cap} t^k S^{(k)}
  static SymSeries sigma(const CPoly& t, int cap);

  int cap() const { return cap_; }
  const CPoly& coeff(const Composition& I) const;
  const std::map<Composition, CPoly>& coeffs() const { return coeffs_; }

  void add_term(const Composition& I, const CPoly& c);

  SymSeries operator+(const SymSeries& o) const;
  SymSeries operator-(const SymSeries& o) const;
  // Product in the free algebra: compositions concatenate.
  SymSeries operator*(const SymSeries& o) const;

  // Two-sided inverse up to the cap, via the geometric series in (1 - A).
  // Requires constant term 1.
  SymSeries inverse() const;

  bool operator==(const SymSeries&) const = default;

  std::string to_string() const;

 private:
  int cap_;
  std::map<Composition, CPoly> coeffs_;
};

}  // namespace ppart
