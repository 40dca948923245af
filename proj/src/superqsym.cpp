#include "ppart/superqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppart {

BiPoly::BiPoly(int m_, CPoly v) : m(m_), value(std::move(v)) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  for (VarName var : value.variables()) {
    bool ok = (var.family == Family::p && var.index <= m + 1) ||
              (var.family == Family::q && var.index <= m);
    if (!ok)
      throw std::invalid_argument("level-m polynomial must live in p_1..p_{m+1}, q_1..q_m");
  }
}

BiPoly N_P(const RankedPoset& P, int m) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  CPoly out;
  P.for_each_order_map(m + 1, m, [&](const std::vector<int>& r) {
    std::vector<std::pair<VarName, int>> factors;
    for (int v = 1; v <= P.size(); ++v)
      factors.push_back({P.odd_height(v) ? qvar(r[v - 1]) : pvar(r[v - 1]), 1});
    out.add_term(Monomial::from_factors(std::move(factors)), 1);
  });
  return BiPoly(m, std::move(out));
}

CPoly collapse_to_x(const BiPoly& h) {
  std::map<VarName, CPoly> assignment;
  for (int i = 1; i <= h.m + 1; ++i) assignment[pvar(i)] = CPoly::variable(xvar(i));
  for (int i = 1; i <= h.m; ++i) assignment[qvar(i)] = CPoly::variable(xvar(i));
  return h.value.substitute(assignment);
}

CheckReport check_Spq_membership(const std::vector<BiPoly>& family) {
  CheckReport report;
  const int m_max = static_cast<int>(family.size()) - 1;
  for (int m = 0; m <= m_max; ++m)
    if (family[m].m != m)
      throw std::invalid_argument("family must carry levels 0..m_max in order");

  for (int m = 1; m <= m_max; ++m) {
    const CPoly& h = family[m].value;
    const CPoly& low = family[m - 1].value;
    for (int i = 1; i <= m; ++i) {
      {  // q_i = 0
        CPoly lhs = h.substitute({{qvar(i), CPoly{}}});
        std::map<VarName, CPoly> embed;
        for (int j = 1; j <= m; ++j) {
          if (j < i)
            embed[pvar(j)] = CPoly::variable(pvar(j));
          else if (j == i)
            embed[pvar(j)] = CPoly::variable(pvar(i)) + CPoly::variable(pvar(i + 1));
          else
            embed[pvar(j)] = CPoly::variable(pvar(j + 1));
        }
        for (int j = 1; j <= m - 1; ++j)
          embed[qvar(j)] = CPoly::variable(qvar(j < i ? j : j + 1));
        report.cells.push_back({m, i, "q=0", lhs == low.substitute(embed)});
      }
      {  // p_i = 0
        CPoly lhs = h.substitute({{pvar(i), CPoly{}}});
        std::map<VarName, CPoly> embed;
        for (int j = 1; j <= m; ++j)
          embed[pvar(j)] = CPoly::variable(pvar(j < i ? j : j + 1));
        for (int j = 1; j <= m - 1; ++j) {
          if (j < i - 1)
            embed[qvar(j)] = CPoly::variable(qvar(j));
          else if (j == i - 1)
            embed[qvar(j)] = CPoly::variable(qvar(i - 1)) + CPoly::variable(qvar(i));
          else
            embed[qvar(j)] = CPoly::variable(qvar(j + 1));
        }
        report.cells.push_back({m, i, "p=0", lhs == low.substitute(embed)});
      }
    }
  }
  return report;
}

CPoly substitute_pq_to_x(const BiPoly& h) {
  const int m = h.m;
  std::map<VarName, CPoly> assignment;
  for (int i = 1; i <= m; ++i) {
    assignment[pvar(i)] =
        CPoly::variable(xvar(2 * i - 1)) - CPoly::variable(xvar(2 * i));
    assignment[qvar(i)] =
        CPoly::variable(xvar(2 * i)) - CPoly::variable(xvar(2 * i + 1));
  }
  assignment[pvar(m + 1)] = CPoly::variable(xvar(2 * m + 1));
  return h.value.substitute(assignment);
}

CheckReport verify_isomorphism_roundtrip(const std::vector<VirtualEval>& family) {
  std::vector<BiPoly> image;
  for (std::size_t m = 0; m < family.size(); ++m) {
    if (family[m].m != static_cast<int>(m))
      throw std::invalid_argument("family must carry levels 0..m_max in order");
    image.push_back(BiPoly(static_cast<int>(m), substitute_x_to_pq(family[m])));
  }
  CheckReport report = check_Spq_membership(image);
  for (std::size_t m = 0; m < family.size(); ++m)
    report.cells.push_back({static_cast<int>(m), 0, "pq-roundtrip",
                            substitute_pq_to_x(image[m]) == family[m].value});
  return report;
}

namespace {

Monomial bialphabet_monomial(const RankedPoset& P, const std::vector<int>& r) {
  std::vector<std::pair<VarName, int>> factors;
  for (int v = 1; v <= P.size(); ++v)
    factors.push_back({P.odd_height(v) ? qvar(r[v - 1]) : pvar(r[v - 1]), 1});
  return Monomial::from_factors(std::move(factors));
}

}  // namespace

bool check_i_avoiding_bijection(const RankedPoset& P, int m, int i) {
  if (m < 1 || i < 1 || i > m)
    throw std::invalid_argument("merge bijection requires 1 <= i <= m");
  const int n = P.size();

  // fibers of the collapse map, keyed by the level-(m-1) image
  std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
  long long avoiding_count = 0;
  P.for_each_order_map(m + 1, m, [&](const std::vector<int>& r) {
    for (int v = 1; v <= n; ++v)
      if (P.odd_height(v) && r[v - 1] == i) return;
    ++avoiding_count;
    std::vector<int> merged = r;
    for (auto& val : merged)
      if (val > i) --val;
    fibers[merged].push_back(r);
  });

  std::vector<std::vector<int>> lower;
  P.for_each_order_map(m, m - 1, [&](const std::vector<int>& r) { lower.push_back(r); });

  if (fibers.size() != lower.size()) return false;
  long long total = 0;
  for (const auto& rp : lower) {
    auto it = fibers.find(rp);
    if (it == fibers.end()) return false;

    // predicted fiber: elements at value i choose between i and i+1 when
    // even-height, and are forced to i+1 when odd-height
    std::vector<std::vector<int>> predicted{{}};
    for (int v = 1; v <= n; ++v) {
      std::vector<int> choices;
      if (rp[v - 1] < i)
        choices = {rp[v - 1]};
      else if (rp[v - 1] > i)
        choices = {rp[v - 1] + 1};
      else if (P.odd_height(v))
        choices = {i + 1};
      else
        choices = {i, i + 1};
      std::vector<std::vector<int>> next;
      for (auto& partial : predicted)
        for (int c : choices) {
          auto ext = partial;
          ext.push_back(c);
          next.push_back(std::move(ext));
        }
      predicted = std::move(next);
    }
    std::sort(predicted.begin(), predicted.end());
    std::vector<std::vector<int>> actual = it->second;
    std::sort(actual.begin(), actual.end());
    if (predicted != actual) return false;
    total += static_cast<long long>(actual.size());

    // weight compatibility: the fiber sums to the merged-variable monomial
    CPoly lhs;
    for (auto& r : actual) lhs.add_term(bialphabet_monomial(P, r), 1);
    std::map<VarName, CPoly> merge;
    merge[pvar(i)] = CPoly::variable(pvar(i)) + CPoly::variable(pvar(i + 1));
    for (int j = i + 1; j <= m; ++j) merge[pvar(j)] = CPoly::variable(pvar(j + 1));
    for (int j = i; j <= m - 1; ++j) merge[qvar(j)] = CPoly::variable(qvar(j + 1));
    CPoly rhs = CPoly::term(bialphabet_monomial(P, rp), 1).substitute(merge);
    if (!(lhs == rhs)) return false;
  }
  return total == avoiding_count;
}

}  // namespace ppart
