#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ppart/posets.hpp"

using namespace ppart;

namespace {

const std::vector<std::pair<int, int>> kFig2Covers = {
    {2, 1}, {2, 5}, {3, 1}, {3, 5}, {1, 6}, {5, 6}, {6, 4}};

// oracle: filter all candidate maps against the full strict order relation
std::set<std::vector<int>> brute_force_order_maps(const RankedPoset& P, int max_even,
                                                  int max_odd) {
  std::set<std::vector<int>> out;
  const int n = P.size();
  std::vector<int> r(n, 1);
  while (true) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      int bound = P.odd_height(v) ? max_odd : max_even;
      if (r[v - 1] > bound) ok = false;
    }
    for (int u = 1; u <= n && ok; ++u)
      for (int v = 1; v <= n && ok; ++v)
        if (P.less(u, v)) {
          if (P.odd_height(u) ? r[u - 1] >= r[v - 1] : r[u - 1] > r[v - 1]) ok = false;
        }
    if (ok) out.insert(r);
    int pos = 0;
    int cap = std::max(max_even, max_odd);
    while (pos < n && r[pos] == cap) r[pos++] = 1;
    if (pos == n) break;
    ++r[pos];
  }
  if (n == 0) out.insert({});
  return out;
}

long long brute_force_ranked_count(int n) {
  // every subset of ordered pairs that survives validation
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v) all.push_back({u, v});
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1) covers.push_back(all[i]);
    try {
      RankedPoset p(n, covers);
      ++count;
    } catch (const std::invalid_argument&) {
    }
  }
  return count;
}

}  // namespace

TEST_CASE("heights of the six-element example poset") {
  RankedPoset P(6, kFig2Covers);
  CHECK(P.heights() == std::vector<int>{1, 0, 0, 3, 1, 2});
  CHECK(P.even_elements() == std::vector<int>{2, 3, 6});
  CHECK(P.odd_elements() == std::vector<int>{1, 4, 5});
}

TEST_CASE("validation") {
  CHECK(RankedPoset(1, {}).heights() == std::vector<int>{0});
  CHECK_THROWS_AS(RankedPoset(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  // transitively implied edge cannot rise one level
  CHECK_THROWS_AS(RankedPoset(3, {{1, 2}, {2, 3}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(RankedPoset(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(RankedPoset(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("strict order relation") {
  RankedPoset P(6, kFig2Covers);
  CHECK(P.less(2, 4));
  CHECK(P.less(3, 6));
  CHECK(!P.less(4, 2));
  CHECK(!P.less(1, 5));
  CHECK(!P.less(1, 1));
}

TEST_CASE("order map enumeration: small frozen cases") {
  RankedPoset single(1, {});
  std::vector<std::vector<int>> maps;
  single.for_each_order_map(3, 3, [&](const std::vector<int>& r) { maps.push_back(r); });
  CHECK(maps == std::vector<std::vector<int>>{{1}, {2}, {3}});

  RankedPoset chain(2, {{1, 2}});
  maps.clear();
  chain.for_each_order_map(2, 2, [&](const std::vector<int>& r) { maps.push_back(r); });
  CHECK(maps == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}});

  // chain of 3: r1 <= r2 < r3 forces (1,1,2) when values stop at 2
  RankedPoset chain3(3, {{1, 2}, {2, 3}});
  maps.clear();
  chain3.for_each_order_map(2, 2, [&](const std::vector<int>& r) { maps.push_back(r); });
  CHECK(maps == std::vector<std::vector<int>>{{1, 1, 2}});
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (int n = 1; n <= 5; ++n)
    for (auto& P : enumerate_ranked_posets(n))
      for (int bound = 1; bound <= 4; ++bound) {
        std::set<std::vector<int>> got;
        P.for_each_order_map(bound, bound, [&](const std::vector<int>& r) {
          CHECK(got.insert(r).second);  // emitted exactly once
        });
        CHECK(got == brute_force_order_maps(P, bound, bound));
      }
}

TEST_CASE("enumeration with parity bounds agrees with the filter") {
  for (auto& P : enumerate_ranked_posets(3))
    for (int m = 0; m <= 3; ++m) {
      std::set<std::vector<int>> got;
      P.for_each_order_map(m + 1, m, [&](const std::vector<int>& r) { got.insert(r); });
      CHECK(got == brute_force_order_maps(P, m + 1, m));
    }
}

TEST_CASE("order map counts are monotone in the bound") {
  RankedPoset P(6, kFig2Covers);
  long long prev = 0;
  for (int bound = 1; bound <= 4; ++bound) {
    long long now = P.count_order_maps(bound, bound);
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("poset of a set composition") {
  SetComposition K({{2, 3}, {1, 5}, {6}, {4}});
  RankedPoset P = poset_from_set_composition(K);
  CHECK(P == RankedPoset(6, kFig2Covers));
  // level sets are exactly the blocks
  for (std::size_t j = 0; j < K.blocks.size(); ++j)
    for (int v : K.blocks[j]) CHECK(P.height(v) == static_cast<int>(j));

  CHECK(poset_from_set_composition(SetComposition({{1}})) == RankedPoset(1, {}));
  CHECK(poset_from_set_composition(SetComposition({{1}, {2}})) == RankedPoset(2, {{1, 2}}));
}

TEST_CASE("shifted disjoint union") {
  RankedPoset single(1, {});
  RankedPoset two = disjoint_union_shifted(single, single);
  CHECK(two == RankedPoset(2, {}));
  CHECK(two.heights() == std::vector<int>{0, 0});

  RankedPoset fig(6, kFig2Covers);
  RankedPoset seven = disjoint_union_shifted(fig, single);
  CHECK(seven.size() == 7);
  CHECK(seven.height(7) == 0);
  CHECK(seven.covers() == fig.covers());

  // levels of a union of level posets stack blockwise
  SetComposition K1({{1}, {2}});
  SetComposition K2({{1}});
  RankedPoset u = disjoint_union_shifted(poset_from_set_composition(K1),
                                         poset_from_set_composition(K2));
  CHECK(u.even_elements() == std::vector<int>{1, 3});
}

TEST_CASE("ranked poset enumeration") {
  CHECK(enumerate_ranked_posets(1).size() == 1);
  auto two = enumerate_ranked_posets(2);
  CHECK(two.size() == 3);
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_ranked_posets(n);
    CHECK(static_cast<long long>(all.size()) == brute_force_ranked_count(n));
    std::set<std::vector<std::pair<int, int>>> dedup;
    for (auto& p : all) dedup.insert(p.covers());
    CHECK(dedup.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_ranked_posets(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_ranked_posets(7), std::invalid_argument);
}

TEST_CASE("random posets validate and are reproducible") {
  std::mt19937_64 rng(42);
  std::vector<std::vector<std::pair<int, int>>> first;
  for (int t = 0; t < 20; ++t) first.push_back(random_ranked_poset(5 + t % 2, rng).covers());
  std::mt19937_64 rng2(42);
  for (int t = 0; t < 20; ++t)
    CHECK(random_ranked_poset(5 + t % 2, rng2).covers() == first[t]);
}
