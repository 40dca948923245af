#include "ppart/qsym.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "ppart/superqsym.hpp"

namespace ppart {

long long QSymElem::coeff(const Composition& I) const {
  auto it = coeffs.find(I);
  return it == coeffs.end() ? 0 : it->second;
}

void QSymElem::add(const Composition& I, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(I, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
  }
}

int QSymElem::max_weight() const {
  int w = 0;
  for (auto& [I, c] : coeffs) w = std::max(w, I.weight());
  return w;
}

std::string QSymElem::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (auto& [I, c] : coeffs) {
    long long a = c;
    if (s.empty()) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "M" + I.to_string();
  }
  return s;
}

VirtualEval::VirtualEval(int m_, CPoly v) : m(m_), value(std::move(v)) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  for (VarName var : value.variables())
    if (var.family != Family::x || var.index > 2 * m + 1)
      throw std::invalid_argument("virtual evaluation must live in x_1..x_{2m+1}");
}

CPoly monomial_M(const Composition& I, int N) {
  if (N < 0) throw std::invalid_argument("variable count must be nonnegative");
  const int r = I.length();
  if (r == 0) return CPoly{1};
  CPoly out;
  if (N < r) return out;
  std::vector<int> a(r);
  for (int t = 0; t < r; ++t) a[t] = t + 1;
  while (true) {
    std::vector<std::pair<VarName, int>> factors;
    for (int t = 0; t < r; ++t) factors.push_back({xvar(a[t]), I.parts[t]});
    out.add_term(Monomial::from_factors(std::move(factors)), 1);
    int t = r - 1;
    while (t >= 0 && a[t] == N - (r - 1 - t)) --t;
    if (t < 0) break;
    ++a[t];
    for (int s = t + 1; s < r; ++s) a[s] = a[s - 1] + 1;
  }
  return out;
}

namespace {

Monomial monomial_of_values(const std::vector<int>& values, Family fam) {
  std::vector<std::pair<VarName, int>> factors;
  for (int v : values) factors.push_back({{fam, v}, 1});
  return Monomial::from_factors(std::move(factors));
}

}  // namespace

CPoly F_P(const RankedPoset& P, int N) { return F_P_value_bounded(P, N, N); }

CPoly F_P_value_bounded(const RankedPoset& P, int max_even, int max_odd) {
  CPoly out;
  P.for_each_order_map(max_even, max_odd, [&](const std::vector<int>& r) {
    out.add_term(monomial_of_values(r, Family::x), 1);
  });
  return out;
}

QSymElem qsym_expand(const CPoly& f, int N) {
  for (VarName v : f.variables())
    if (v.family != Family::x || v.index > N)
      throw std::invalid_argument("qsym_expand input must live in x_1..x_N");
  if (f.total_degree() > N)
    throw std::invalid_argument("qsym_expand needs at least as many variables as the degree");

  QSymElem F;
  for (auto& [mono, c] : f.terms()) {
    // packed monomials x_1^{i_1} ... x_r^{i_r} carry the coordinates
    const auto& factors = mono.factors();
    bool packed = true;
    for (std::size_t t = 0; t < factors.size(); ++t)
      if (!(factors[t].first == xvar(static_cast<int>(t) + 1))) {
        packed = false;
        break;
      }
    if (!packed) continue;
    std::vector<int> parts;
    for (auto& [v, e] : factors) parts.push_back(e);
    F.add(Composition(std::move(parts)), c);
  }
  CPoly rebuilt;
  for (auto& [I, c] : F.coeffs) rebuilt += CPoly{c} * monomial_M(I, N);
  if (!(rebuilt == f)) throw std::domain_error("not quasi-symmetric");
  return F;
}

const SymSeries& virtual_series(int m, int cap) {
  if (m < 0 || cap < 0) throw std::invalid_argument("virtual_series requires m, cap >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, cap);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SymSeries s = SymSeries::one(cap);
  for (int j = 1; j <= 2 * m + 1; ++j) {
    SymSeries f = SymSeries::sigma(CPoly::variable(xvar(j)), cap);
    if (j % 2 == 1) f = f.inverse();
    s = s * f;
  }
  return cache.emplace(key, std::move(s)).first->second;
}

VirtualEval monomial_M_virtual(const Composition& I, int m) {
  return VirtualEval(m, virtual_series(m, I.weight()).coeff(I));
}

VirtualEval eval_virtual(const QSymElem& F, int m) {
  const SymSeries& s = virtual_series(m, F.max_weight());
  CPoly out;
  for (auto& [I, c] : F.coeffs) out += CPoly{c} * s.coeff(I);
  return VirtualEval(m, std::move(out));
}

CPoly monomial_M_virtual_direct(const Composition& I, int m) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  const int top = 2 * m + 1;
  auto sgn = [](int j) { return j % 2 == 1 ? -1 : 1; };
  CPoly out;
  switch (I.length()) {
    case 0:
      return CPoly{1};
    case 1: {
      int k = I.parts[0];
      for (int j = 1; j <= top; ++j)
        out.add_term(Monomial::variable(xvar(j), k), sgn(j));
      return out;
    }
    case 2: {
      int k = I.parts[0], l = I.parts[1];
      for (int j = 1; j <= top; j += 2)
        out.add_term(Monomial::variable(xvar(j), k + l), 1);
      for (int s = 1; s <= top; ++s)
        for (int t = s + 1; t <= top; ++t)
          out.add_term(Monomial::variable(xvar(s), k) * Monomial::variable(xvar(t), l),
                       sgn(s) * sgn(t));
      return out;
    }
    case 3: {
      int k = I.parts[0], l = I.parts[1], n = I.parts[2];
      for (int j = 1; j <= top; j += 2)
        out.add_term(Monomial::variable(xvar(j), k + l + n), -1);
      for (int t = 1; t <= top; t += 2)
        for (int s = 1; s < t; ++s)
          out.add_term(Monomial::variable(xvar(s), k) * Monomial::variable(xvar(t), l + n),
                       sgn(s));
      for (int s = 1; s <= top; s += 2)
        for (int t = s + 1; t <= top; ++t)
          out.add_term(Monomial::variable(xvar(s), k + l) * Monomial::variable(xvar(t), n),
                       sgn(t));
      for (int s = 1; s <= top; ++s)
        for (int t = s + 1; t <= top; ++t)
          for (int u = t + 1; u <= top; ++u)
            out.add_term(Monomial::variable(xvar(s), k) * Monomial::variable(xvar(t), l) *
                             Monomial::variable(xvar(u), n),
                         sgn(s) * sgn(t) * sgn(u));
      return out;
    }
    default:
      throw std::invalid_argument("direct formulas cover compositions of length <= 3");
  }
}

CPoly kill_odd_variables(const VirtualEval& v) {
  std::map<VarName, CPoly> assignment;
  for (int i = 0; i <= v.m; ++i) assignment[xvar(2 * i + 1)] = CPoly{};
  return v.value.substitute(assignment);
}

CPoly substitute_x_to_pq(const VirtualEval& v) {
  const int m = v.m;
  std::map<VarName, CPoly> assignment;
  for (int i = 0; i <= m; ++i) {
    CPoly odd;  // x_{2i+1}
    for (int t = i + 1; t <= m; ++t) odd += CPoly::variable(qvar(t));
    for (int t = i + 1; t <= m + 1; ++t) odd += CPoly::variable(pvar(t));
    assignment[xvar(2 * i + 1)] = std::move(odd);
  }
  for (int i = 1; i <= m; ++i) {
    CPoly even;  // x_{2i}
    for (int t = i; t <= m; ++t) even += CPoly::variable(qvar(t));
    for (int t = i + 1; t <= m + 1; ++t) even += CPoly::variable(pvar(t));
    assignment[xvar(2 * i)] = std::move(even);
  }
  return v.value.substitute(assignment);
}

CheckReport check_Sx_membership(const std::vector<CPoly>& family) {
  CheckReport report;
  const int m_max = static_cast<int>(family.size()) - 1;
  for (int m = 0; m <= m_max; ++m)
    VirtualEval(m, family[m]);  // variable-range validation only

  for (int m = 1; m <= m_max; ++m) {
    for (int i = 1; i <= 2 * m; ++i) {
      CPoly merged = family[m].substitute({{xvar(i + 1), CPoly::variable(xvar(i))}});
      // re-embed the lower level around the removed pair x_i, x_{i+1}
      std::map<VarName, CPoly> embed;
      for (int j = i; j <= 2 * m - 1; ++j) embed[xvar(j)] = CPoly::variable(xvar(j + 2));
      CPoly expected = family[m - 1].substitute(embed);
      report.cells.push_back({m, i, "merge-x", merged == expected});
    }
  }
  for (int m = 0; m < m_max; ++m) {
    CPoly trimmed = family[m + 1].substitute(
        {{xvar(2 * m + 2), CPoly{}}, {xvar(2 * m + 3), CPoly{}}});
    report.cells.push_back({m + 1, 0, "stability", trimmed == family[m]});
  }
  return report;
}

bool verify_main_theorem(const RankedPoset& P, int m) {
  const int N = std::max(P.size(), 1);
  QSymElem F = qsym_expand(F_P(P, N), N);
  CPoly rhs = substitute_x_to_pq(eval_virtual(F, m));
  if (P.even_elements().size() % 2 == 1) rhs = -rhs;
  return rhs == N_P(P, m).value;
}

}  // namespace ppart
