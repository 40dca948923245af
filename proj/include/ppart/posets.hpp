#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppart/combinatorics.hpp"

namespace ppart {

// Finite poset on labels 1..n given by its covering relation, with every
// cover rising exactly one height level, where height(v) is the longest
// chain below v.  Posets failing this are rejected, not reinterpreted.
// V0 / V1 denote the elements of even / odd height.
class RankedPoset {
 public:
  RankedPoset(int n, std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int height(int v) const { return heights_[v - 1]; }
  bool odd_height(int v) const { return heights_[v - 1] % 2 != 0; }
  const std::vector<int>& heights() const { return heights_; }

  std::vector<int> even_elements() const;  // V0, ascending labels
  std::vector<int> odd_elements() const;   // V1

  bool less(int u, int v) const { return below_[u - 1][v - 1]; }  // u <_P v

  friend bool operator==(const RankedPoset& a, const RankedPoset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

  // Streams every map r : {1..n} -> {1, 2, ...} satisfying the order
  // condition, with r(v) <= max_even on V0 and r(v) <= max_odd on V1.
  // The condition is enforced on covers only; strictness composes along
  // chains in a ranked poset.  Backtracks along a fixed topological
  // order, so the stream is deterministic.  The callback receives r as a
  // vector indexed by label-1.
  template <typename F>
  void for_each_order_map(int max_even, int max_odd, F&& visit) const {
    if (max_even < 0 || max_odd < 0)
      throw std::invalid_argument("value bounds must be nonnegative");
    std::vector<int> r(n_, 0);
    auto step = [&](auto&& self, int t) -> void {
      if (t == n_) {
        visit(static_cast<const std::vector<int>&>(r));
        return;
      }
      int v = topo_[t];
      int lb = 1;
      for (auto [u, strict] : parents_[v - 1])
        lb = std::max(lb, r[u - 1] + (strict ? 1 : 0));
      int ub = odd_height(v) ? max_odd : max_even;
      for (int val = lb; val <= ub; ++val) {
        r[v - 1] = val;
        self(self, t + 1);
      }
      r[v - 1] = 0;
    };
    step(step, 0);
  }

  long long count_order_maps(int max_even, int max_odd) const {
    long long c = 0;
    for_each_order_map(max_even, max_odd, [&](const std::vector<int>&) { ++c; });
    return c;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;  // sorted, unique
  std::vector<int> heights_;
  std::vector<int> topo_;  // labels ordered by (height, label)
  std::vector<std::vector<std::pair<int, bool>>> parents_;  // (parent, strict)
  std::vector<std::vector<bool>> below_;
};

// Heights are the block indices: K_i is exactly level i.
RankedPoset poset_from_set_composition(const SetComposition& K);

// Labels of the second poset are shifted by the size of the first; no
// cross relations.
RankedPoset disjoint_union_shifted(const RankedPoset& a, const RankedPoset& b);

// Every labeled ranked poset on {1..n}, enumerated by level structure
// (a set composition) and, per non-minimal vertex, a nonempty parent set
// in the previous level.  Supported for 1 <= n <= 6.
std::vector<RankedPoset> enumerate_ranked_posets(int n);

// Seeded sampler over the same parameterization; no uniformity claim.
RankedPoset random_ranked_poset(int n, std::mt19937_64& rng);

}  // namespace ppart
