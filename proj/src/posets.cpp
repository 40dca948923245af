#include "ppart/posets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ppart {

RankedPoset::RankedPoset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)) {
  if (n_ < 0) throw std::invalid_argument("poset size must be nonnegative");
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  for (auto [u, v] : covers_)
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
      throw std::invalid_argument("cover labels must be distinct elements of 1..n");

  std::vector<std::vector<int>> children(n_);
  std::vector<int> indeg(n_, 0);
  for (auto [u, v] : covers_) {
    children[u - 1].push_back(v);
    ++indeg[v - 1];
  }

  heights_.assign(n_, 0);
  std::deque<int> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v - 1] == 0) ready.push_back(v);
  int processed = 0;
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop_front();
    ++processed;
    for (int v : children[u - 1]) {
      heights_[v - 1] = std::max(heights_[v - 1], heights_[u - 1] + 1);
      if (--indeg[v - 1] == 0) ready.push_back(v);
    }
  }
  if (processed != n_) throw std::invalid_argument("covering relation contains a cycle");

  for (auto [u, v] : covers_)
    if (heights_[v - 1] != heights_[u - 1] + 1)
      throw std::invalid_argument("cover does not rise exactly one height level: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");

  topo_.resize(n_);
  std::iota(topo_.begin(), topo_.end(), 1);
  std::sort(topo_.begin(), topo_.end(), [&](int a, int b) {
    if (heights_[a - 1] != heights_[b - 1]) return heights_[a - 1] < heights_[b - 1];
    return a < b;
  });

  parents_.assign(n_, {});
  for (auto [u, v] : covers_) parents_[v - 1].push_back({u, heights_[u - 1] % 2 != 0});
  for (auto& ps : parents_) std::sort(ps.begin(), ps.end());

  // strict order relation: reachability along covers, filled in reverse
  // topological order so children are complete first
  below_.assign(n_, std::vector<bool>(n_, false));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int u = *it;
    for (int v : children[u - 1]) {
      below_[u - 1][v - 1] = true;
      for (int w = 0; w < n_; ++w)
        if (below_[v - 1][w]) below_[u - 1][w] = true;
    }
  }
}

std::vector<int> RankedPoset::even_elements() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (!odd_height(v)) out.push_back(v);
  return out;
}

std::vector<int> RankedPoset::odd_elements() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (odd_height(v)) out.push_back(v);
  return out;
}

RankedPoset poset_from_set_composition(const SetComposition& K) {
  std::vector<std::pair<int, int>> covers;
  for (std::size_t j = 0; j + 1 < K.blocks.size(); ++j)
    for (int u : K.blocks[j])
      for (int v : K.blocks[j + 1]) covers.push_back({u, v});
  return RankedPoset(K.ground_size(), std::move(covers));
}

RankedPoset disjoint_union_shifted(const RankedPoset& a, const RankedPoset& b) {
  std::vector<std::pair<int, int>> covers = a.covers();
  for (auto [u, v] : b.covers()) covers.push_back({u + a.size(), v + a.size()});
  return RankedPoset(a.size() + b.size(), std::move(covers));
}

std::vector<RankedPoset> enumerate_ranked_posets(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_ranked_posets supports 1 <= n <= 6");
  std::vector<RankedPoset> out;
  for (const SetComposition& levels : set_compositions_of(n)) {
    // one slot per non-minimal vertex: a nonempty parent set in the level
    // below; every choice is a distinct ranked poset and all arise
    std::vector<std::pair<int, const std::vector<int>*>> slots;
    for (std::size_t j = 1; j < levels.blocks.size(); ++j)
      for (int v : levels.blocks[j]) slots.push_back({v, &levels.blocks[j - 1]});
    std::vector<unsigned> masks(slots.size(), 1);
    while (true) {
      std::vector<std::pair<int, int>> covers;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto& prev = *slots[s].second;
        for (std::size_t i = 0; i < prev.size(); ++i)
          if ((masks[s] >> i) & 1) covers.push_back({prev[i], slots[s].first});
      }
      out.emplace_back(n, std::move(covers));
      // odometer over nonempty parent subsets
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        unsigned limit = (1u << slots[s].second->size()) - 1;
        if (masks[s] < limit) {
          ++masks[s];
          break;
        }
        masks[s] = 1;
      }
      if (s == slots.size()) break;
    }
  }
  return out;
}

RankedPoset random_ranked_poset(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_ranked_poset requires n >= 1");
  auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  int num_levels = rnd(1, n);
  // level sizes: a composition of n with num_levels parts
  std::vector<int> cuts;
  {
    std::vector<int> pool(n - 1);
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < num_levels - 1; ++i) {
      int j = rnd(i, static_cast<int>(pool.size()) - 1);
      std::swap(pool[i], pool[j]);
      cuts.push_back(pool[i]);
    }
    std::sort(cuts.begin(), cuts.end());
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(labels[i], labels[rnd(0, i)]);

  std::vector<std::vector<int>> levels;
  std::size_t start = 0;
  cuts.push_back(n);
  for (int cut : cuts) {
    levels.push_back(std::vector<int>(labels.begin() + start, labels.begin() + cut));
    start = cut;
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t j = 1; j < levels.size(); ++j) {
    for (int v : levels[j]) {
      unsigned limit = (1u << levels[j - 1].size()) - 1;
      unsigned mask = static_cast<unsigned>(rnd(1, static_cast<int>(limit)));
      for (std::size_t i = 0; i < levels[j - 1].size(); ++i)
        if ((mask >> i) & 1) covers.push_back({levels[j - 1][i], v});
    }
  }
  return RankedPoset(n, std::move(covers));
}

}  // namespace ppart
