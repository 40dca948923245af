#include "ppart/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace ppart {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void compositions_rec(int n, std::vector<int>& acc, std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(Composition(acc));
    return;
  }
  for (int first = n; first >= 1; --first) {
    acc.push_back(first);
    compositions_rec(n - first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> acc;
  compositions_rec(n, acc, out);
  return out;
}

SetComposition::SetComposition(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
  std::set<int> seen;
  int total = 0;
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("set composition blocks must be nonempty");
    std::sort(blk.begin(), blk.end());
    for (int e : blk) {
      if (e < 1 || !seen.insert(e).second)
        throw std::invalid_argument("set composition blocks must be disjoint subsets of 1..n");
      ++total;
    }
  }
  if (!seen.empty() && *seen.rbegin() != total)
    throw std::invalid_argument("set composition must cover exactly 1..n");
}

int SetComposition::ground_size() const {
  int s = 0;
  for (auto& b : blocks) s += static_cast<int>(b.size());
  return s;
}

std::string SetComposition::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j) s += ",";
    s += "{";
    for (std::size_t i = 0; i < blocks[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blocks[j][i]);
    }
    s += "}";
  }
  return s + ")";
}

namespace {

void set_comps_rec(const std::vector<int>& rem, std::vector<std::vector<int>>& acc,
                   std::vector<SetComposition>& out) {
  if (rem.empty()) {
    out.push_back(SetComposition(acc));
    return;
  }
  int k = static_cast<int>(rem.size());
  for (unsigned mask = (1u << k) - 1; mask >= 1; --mask) {
    std::vector<int> block, rest;
    for (int i = 0; i < k; ++i) ((mask >> i) & 1 ? block : rest).push_back(rem[i]);
    acc.push_back(std::move(block));
    set_comps_rec(rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SetComposition> set_compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("set_compositions_of: n must be nonnegative");
  if (n > 14) throw std::invalid_argument("set_compositions_of: n too large to enumerate");
  if (n == 0) return {SetComposition{}};
  std::vector<int> rem(n);
  for (int i = 0; i < n; ++i) rem[i] = i + 1;
  std::vector<SetComposition> out;
  std::vector<std::vector<int>> acc;
  set_comps_rec(rem, acc, out);
  return out;
}

Partition::Partition(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) throw std::invalid_argument("partition rows must be positive");
    if (i && rows[i - 1] < rows[i])
      throw std::invalid_argument("partition rows must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int x : rows) s += x;
  return s;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    acc.push_back(first);
    partitions_rec(n - first, first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

InterlacingCoords::InterlacingCoords(std::vector<int> v) : xs(std::move(v)) {
  if (xs.empty() || xs.size() % 2 == 0)
    throw std::invalid_argument("interlacing coordinates must have odd length");
}

std::string InterlacingCoords::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

MultirectCoords::MultirectCoords(std::vector<int> p_, std::vector<int> q_)
    : p(std::move(p_)), q(std::move(q_)) {
  if (p.size() != q.size() + 1)
    throw std::invalid_argument("multirectangular coordinates require |p| == |q| + 1");
}

namespace {

int narrow_checked(long long v) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw std::overflow_error("coordinate arithmetic overflow");
  return static_cast<int>(v);
}

}  // namespace

int interlacing_center(const InterlacingCoords& coords) {
  long long c = 0;
  for (std::size_t i = 0; i < coords.xs.size(); ++i)
    c += (i % 2 == 0 ? coords.xs[i] : -coords.xs[i]);
  return narrow_checked(c);
}

namespace {

void require_weakly_decreasing(const std::vector<int>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] < xs[i])
      throw std::invalid_argument("interlacing coordinates must be weakly decreasing");
}

std::vector<int> cancel_equal_pairs(const std::vector<int>& xs) {
  std::vector<int> y;
  for (int v : xs) {
    if (!y.empty() && y.back() == v)
      y.pop_back();
    else
      y.push_back(v);
  }
  return y;
}

}  // namespace

InterlacingCoords reduce_interlacing(const InterlacingCoords& coords) {
  require_weakly_decreasing(coords.xs);
  return InterlacingCoords(cancel_equal_pairs(coords.xs));
}

InterlacingCoords interlacing_from_partition(const Partition& lambda) {
  const auto& rows = lambda.rows;
  const int len = lambda.length();
  // The border has slope -1 over [k, k+1] exactly when k is one of the
  // values lambda_i - i (rows beyond len count as 0).
  auto descent = [&](int k) {
    for (int i = 1; i <= len; ++i)
      if (rows[i - 1] - i == k) return true;
    return k <= -(len + 1);
  };
  std::vector<int> xs;
  for (int k = (len ? rows[0] : 0) + 1; k >= -(len + 1); --k) {
    bool right = descent(k - 1), at = descent(k);
    if (at != right) xs.push_back(k);  // slope change: local extremum
  }
  return InterlacingCoords(xs);
}

std::pair<Partition, int> partition_from_interlacing(const InterlacingCoords& coords) {
  require_weakly_decreasing(coords.xs);
  std::vector<int> y = cancel_equal_pairs(coords.xs);
  const int c = [&] {
    long long s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += (i % 2 == 0 ? y[i] : -y[i]);
    return static_cast<int>(s);
  }();
  for (auto& v : y) v -= c;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i - 1] <= y[i]) throw std::logic_error("pair cancellation left a non-strict sequence");

  const int m = (static_cast<int>(y.size()) - 1) / 2;
  // Descending walk over the recentered profile: slope -1 holds on
  // [y_{2j}, y_{2j-1}) and below y_{2m+1}.
  auto descent = [&](int k) {
    for (int j = 1; j <= m; ++j)
      if (y[2 * j - 1] <= k && k < y[2 * j - 2]) return true;
    return k < y[2 * m];
  };
  std::vector<int> rows;
  int row_index = 0;
  for (int k = y[0] - 1;; --k) {
    if (descent(k)) {
      ++row_index;
      int row = k + row_index;
      if (row <= 0) break;
      rows.push_back(row);
    }
    if (k < y[2 * m] - static_cast<int>(y.size()) - 2)
      throw std::logic_error("profile reconstruction did not close up");
  }
  return {Partition(rows), c};
}

MultirectCoords multirect_from_interlacing(const InterlacingCoords& coords) {
  const auto& xs = coords.xs;
  const int m = coords.levels();
  std::vector<int> p(m + 1), q(m);
  for (int i = 1; i <= m; ++i) {
    p[i - 1] = xs[2 * i - 2] - xs[2 * i - 1];
    q[i - 1] = xs[2 * i - 1] - xs[2 * i];
  }
  p[m] = xs[2 * m];
  return MultirectCoords(std::move(p), std::move(q));
}

InterlacingCoords interlacing_from_multirect(const MultirectCoords& pq) {
  const int m = pq.levels();
  // suffix sums: sp[i] = p_{i+1} + ... + p_{m+1}, sq[i] = q_{i+1} + ... + q_m
  std::vector<long long> sp(m + 2, 0), sq(m + 1, 0);
  for (int i = m; i >= 0; --i) sp[i] = sp[i + 1] + pq.p[i];
  for (int i = m - 1; i >= 0; --i) sq[i] = sq[i + 1] + pq.q[i];
  std::vector<int> xs(2 * m + 1);
  for (int i = 0; i <= m; ++i) xs[2 * i] = narrow_checked(sq[i] + sp[i]);  // x_{2i+1}
  for (int i = 1; i <= m; ++i)
    xs[2 * i - 1] = narrow_checked(sq[i - 1] + sp[i]);  // x_{2i}
  return InterlacingCoords(std::move(xs));
}

}  // namespace ppart
