#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppart/algebra.hpp"
#include "ppart/combinatorics.hpp"
#include "ppart/linalg.hpp"
#include "ppart/posets.hpp"

namespace ppart {

// A packed word uses every letter of an initial segment {1..k} at least
// once.  Packing relabels the value set of a word order-preservingly.
using PackedWord = std::vector<int>;

PackedWord pack_word(const std::vector<int>& values);
bool is_packed_word(const std::vector<int>& w);

// word of P_K's minimal order map: position v carries the block index+1
PackedWord word_of_set_composition(const SetComposition& K);
SetComposition set_composition_of_word(const PackedWord& w);

// All packed words of length n (one per set composition, same order).
std::vector<PackedWord> packed_words_of(int n);

// Word quasi-symmetric function in packed-word coordinates.  A degree-n
// element is represented by its truncation to n letters, which is
// faithful.
struct WQElem {
  int degree = 0;
  std::map<PackedWord, long long> coeffs;  // nonzero entries only

  long long coeff(const PackedWord& w) const;
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const WQElem&) const = default;

  std::string to_string() const;
};

// Interleaved letter counts (#b_1, #d_1, #b_2, #d_2, ...) of a word in
// the b/d alphabets; compared lexicographically with zero padding.
struct EvaluationVector {
  std::vector<long long> counts;  // trailing zeros trimmed

  static EvaluationVector of_word(const Word& w);

  bool operator==(const EvaluationVector&) const = default;
  bool lex_less(const EvaluationVector& o) const;

  std::string to_string() const;
};

// Noncommutative generating series: one word a_{r(1)} ... a_{r(n)} per
// order-condition map with values <= k; letter positions follow element
// labels, not poset order.
NCPoly bold_F_P(const RankedPoset& P, int k);

// Two-alphabet analog at level m (values <= m+1, odd-height values <= m):
// position v carries b_{r(v)} for even height, d_{r(v)} for odd height.
NCPoly bold_N_P(const RankedPoset& P, int m);

// Packed-word expansion of a homogeneous degree-n polynomial in
// a_1..a_k, n <= k.  Verifies that coefficients depend only on the
// packing: every word must match its packed representative and every
// relabeling of a supported packed word must be present.  Throws
// std::domain_error("not word-quasi-symmetric") otherwise.
WQElem wq_expand(const NCPoly& f, int k);

// The monomial with lexicographically largest evaluation vector, and the
// set composition it decodes to (letters b_{j+1} mark block 2j, letters
// d_{j+1} mark block 2j+1).  A tie for the leading evaluation or a gap in
// the block sequence throws std::domain_error.
std::pair<EvaluationVector, SetComposition> leading_evaluation(const NCPoly& f);

// The degree-n basis indexed by set compositions, with an exact solver
// for coordinates in it.  Construction proves linear independence (the
// coefficient matrix over packed words is factored exactly).
class LuotoBasis {
 public:
  explicit LuotoBasis(int n);  // supported for 0 <= n <= 5

  int degree() const { return n_; }
  const std::vector<SetComposition>& keys() const { return ks_; }
  const std::vector<WQElem>& elements() const { return elems_; }

  // Exact expansion of a homogeneous degree-n element; coefficients are
  // asserted to be integers.  Zero coefficients are dropped.
  std::map<SetComposition, long long> expand(const WQElem& f) const;

  // Exact rank of the coefficient matrix (independent elimination pass).
  int rank() const;

 private:
  int n_;
  std::vector<SetComposition> ks_;
  std::vector<WQElem> elems_;
  std::vector<PackedWord> words_;  // row keys
  std::map<PackedWord, int> word_index_;
  std::optional<LinearSolver> solver_;
};

// Shared per-degree basis instance.
const LuotoBasis& luoto_basis(int n);

std::map<SetComposition, long long> luoto_expand(const WQElem& f, int n);

// Independent combinatorial expansion: splits the order maps of P by the
// set S of incomparable V0 x V1 pairs (x, y) with r(x) <= r(y).  Each
// satisfiable constraint system (covers plus one orientation per pair,
// checked by longest-path potentials with strict edges of weight 1) is a
// complete-bipartite level poset; its level structure is the key.
std::map<SetComposition, long long> splitting_expand(const RankedPoset& P);

// Expansion of the product of two basis elements, computed on the
// shifted disjoint union; the concatenation product is cross-checked
// against the union series first.
std::map<SetComposition, long long> luoto_product(const SetComposition& k1,
                                                  const SetComposition& k2);

// Abelianization: a -> x, b -> p, d -> q, commutative families fixed.
CPoly commutative_projection(const NCPoly& f);

// The letter substitution a_j -> sums of b/d letters that mirrors the
// p/q change of variables at level m:
//   a_{2i+1} = d_{i+1}+...+d_m + b_{i+1}+...+b_{m+1}
//   a_{2i}   = d_i+...+d_m + b_{i+1}+...+b_{m+1}
std::map<VarName, NCPoly> virtual_letter_assignment(int m);

}  // namespace ppart
