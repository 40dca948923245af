#include "ppart/verify.hpp"

#include <random>
#include <sstream>

#include "ppart/qsym.hpp"
#include "ppart/superqsym.hpp"
#include "ppart/wqsym.hpp"

namespace ppart {

namespace {

std::vector<RankedPoset> posets_up_to(int n_max) {
  std::vector<RankedPoset> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& p : enumerate_ranked_posets(n)) out.push_back(p);
  return out;
}

long long ordered_bell(int n) {
  // a(n) = sum_k C(n,k) a(n-k)
  std::vector<long long> a(n + 1, 0);
  a[0] = 1;
  for (int t = 1; t <= n; ++t) {
    long long binom = 1;
    for (int k = 1; k <= t; ++k) {
      binom = binom * (t - k + 1) / k;
      a[t] += binom * a[t - k];
    }
  }
  return a[n];
}

std::vector<Composition> compositions_up_to(int w_max) {
  std::vector<Composition> out;
  for (int n = 0; n <= w_max; ++n)
    for (auto& I : compositions_of(n)) out.push_back(I);
  return out;
}

// -------- seeded generators for the property suites --------

int rnd(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CPoly random_cpoly(std::mt19937_64& rng, const std::vector<VarName>& vars, int max_terms,
                   int max_deg, int max_coef) {
  CPoly f;
  int terms = rnd(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<VarName, int>> factors;
    int deg = rnd(rng, 0, max_deg);
    for (int d = 0; d < deg; ++d)
      factors.push_back({vars[rnd(rng, 0, static_cast<int>(vars.size()) - 1)], 1});
    long long c = rnd(rng, -max_coef, max_coef);
    f.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return f;
}

NCPoly random_ncpoly(std::mt19937_64& rng, const std::vector<VarName>& letters, int max_terms,
                     int max_len, int max_coef) {
  NCPoly f;
  int terms = rnd(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = rnd(rng, 0, max_len);
    for (int i = 0; i < len; ++i)
      w.push_back(letters[rnd(rng, 0, static_cast<int>(letters.size()) - 1)]);
    f.add_term(w, rnd(rng, -max_coef, max_coef));
  }
  return f;
}

SymSeries random_unit_series(std::mt19937_64& rng, int cap) {
  SymSeries s = SymSeries::one(cap);
  std::vector<VarName> vars = {xvar(1), xvar(2)};
  int extra = rnd(rng, 1, 6);
  for (int t = 0; t < extra; ++t) {
    int w = rnd(rng, 1, cap);
    std::vector<int> parts;
    while (w > 0) {
      int part = rnd(rng, 1, w);
      parts.push_back(part);
      w -= part;
    }
    s.add_term(Composition(std::move(parts)), random_cpoly(rng, vars, 2, 2, 2));
  }
  return s;
}

std::string counted(long long n, const std::string& what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

CriterionResult verify_main_corpus(const VerifyOptions& opt) {
  bool ok = true;
  long long exhaustive = 0, randomized = 0;
  std::string first_failure;
  for (int n = 1; n <= opt.n_max; ++n) {
    for (auto& P : enumerate_ranked_posets(n)) {
      for (int m = 0; m <= opt.m_max; ++m) {
        ++exhaustive;
        if (!verify_main_theorem(P, m) && ok) {
          ok = false;
          first_failure = " first failure: n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
  }
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.random_count; ++t) {
    RankedPoset P = random_ranked_poset(5 + t % 2, rng);
    for (int m = 0; m <= 2; ++m) {
      ++randomized;
      if (!verify_main_theorem(P, m) && ok) {
        ok = false;
        first_failure = " first failure: random poset #" + std::to_string(t);
      }
    }
  }
  return {1, "two-alphabet reconstruction identity", ok,
          counted(exhaustive, "exhaustive") + " + " + counted(randomized, "randomized checks") +
              first_failure,
          exhaustive + randomized};
}

namespace {

CriterionResult criterion_closed_forms() {
  bool ok = true;
  long long checks = 0;
  for (int m = 0; m <= 3; ++m)
    for (int k = 1; k <= 4; ++k) {
      ++checks;
      Composition I{std::vector<int>{k}};
      ok = ok && monomial_M_virtual(I, m).value == monomial_M_virtual_direct(I, m);
    }
  for (int m = 0; m <= 2; ++m)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        ++checks;
        Composition I{std::vector<int>{k, l}};
        ok = ok && monomial_M_virtual(I, m).value == monomial_M_virtual_direct(I, m);
      }
  for (int m = 0; m <= 2; ++m)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int r = 1; r <= 3; ++r) {
          ++checks;
          Composition I{std::vector<int>{k, l, r}};
          ok = ok && monomial_M_virtual(I, m).value == monomial_M_virtual_direct(I, m);
        }
  return {2, "virtual monomial closed forms (lengths 1-3)", ok, counted(checks, "comparisons")};
}

CriterionResult criterion_np_equations() {
  bool ok = true;
  long long cells = 0;
  for (auto& P : posets_up_to(4)) {
    std::vector<BiPoly> family;
    for (int m = 0; m <= 3; ++m) family.push_back(N_P(P, m));
    CheckReport r = check_Spq_membership(family);
    cells += static_cast<long long>(r.cells.size());
    ok = ok && r.all_ok();
  }
  return {3, "two-alphabet series satisfies the p/q functional equations", ok,
          counted(cells, "substitution cells over all ranked posets with n <= 4")};
}

CriterionResult criterion_sx_solutions() {
  bool ok = true;
  long long cells = 0;
  for (auto& I : compositions_up_to(4)) {
    std::vector<CPoly> family;
    for (int m = 0; m <= 3; ++m) family.push_back(monomial_M_virtual(I, m).value);
    CheckReport r = check_Sx_membership(family);
    cells += static_cast<long long>(r.cells.size());
    ok = ok && r.all_ok();
  }
  bool ranks = true;
  for (int n = 1; n <= 4; ++n) {
    // coefficient matrix of {M_I(X_n) : |I| = n} over its monomials
    std::vector<CPoly> polys;
    for (auto& I : compositions_of(n)) polys.push_back(monomial_M_virtual(I, n).value);
    std::map<Monomial, int, MonomialLess> cols;
    for (auto& f : polys)
      for (auto& [mono, c] : f.terms()) cols.emplace(mono, 0);
    int idx = 0;
    for (auto& [mono, col] : cols) col = idx++;
    Matrix a(polys.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t r = 0; r < polys.size(); ++r)
      for (auto& [mono, c] : polys[r].terms()) a[r][cols.at(mono)] = c;
    ranks = ranks && matrix_rank(std::move(a)) == (1 << (n - 1));
  }
  return {4, "virtual monomials solve the merge equation; full rank per degree", ok && ranks,
          counted(cells, "merge/stability cells") + (ranks ? ", ranks 1,2,4,8" : ", RANK MISMATCH")};
}

CriterionResult criterion_coordinates() {
  bool ok = true;
  long long checks = 0;
  for (int n = 0; n <= 20; ++n)
    for (auto& lam : partitions_of(n)) {
      ++checks;
      auto [back, c] = partition_from_interlacing(interlacing_from_partition(lam));
      ok = ok && back == lam && c == 0;
    }
  Partition fig{std::vector<int>{4, 4, 2}};
  ok = ok && interlacing_from_partition(fig).xs == std::vector<int>{4, 2, 0, -1, -3};

  // every strictly decreasing odd-length vector with entries in [-6,6]
  std::vector<int> grid;
  for (int v = 6; v >= -6; --v) grid.push_back(v);
  const int g = static_cast<int>(grid.size());
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    std::vector<int> xs;
    for (int i = 0; i < g; ++i)
      if ((mask >> i) & 1) xs.push_back(grid[i]);
    ++checks;
    InterlacingCoords coords(xs);
    InterlacingCoords round = interlacing_from_multirect(multirect_from_interlacing(coords));
    ok = ok && round.xs == xs;
    MultirectCoords pq = multirect_from_interlacing(coords);
    MultirectCoords pq2 = multirect_from_interlacing(interlacing_from_multirect(pq));
    ok = ok && pq2 == pq;
    auto [lam, c] = partition_from_interlacing(coords);
    ok = ok && interlacing_from_partition(lam).xs ==
                   [&] {
                     std::vector<int> shifted = xs;
                     for (auto& v : shifted) v -= c;
                     return shifted;
                   }();
  }
  return {5, "diagram coordinate round trips", ok, counted(checks, "round trips")};
}

CriterionResult criterion_luoto_rank() {
  bool ok = true;
  std::string ranks;
  for (int n = 1; n <= 4; ++n) {
    const LuotoBasis& basis = luoto_basis(n);
    long long expected = ordered_bell(n);
    long long keys = static_cast<long long>(basis.keys().size());
    int rank = basis.rank();
    ok = ok && keys == expected && rank == expected;
    if (!ranks.empty()) ranks += ",";
    ranks += std::to_string(rank);
  }
  bool decode = true;
  long long decoded = 0;
  for (int n = 1; n <= 4; ++n)
    for (auto& K : set_compositions_of(n)) {
      ++decoded;
      auto [ev, back] = leading_evaluation(bold_N_P(poset_from_set_composition(K), n));
      decode = decode && back == K;
    }
  return {6, "set-composition basis rank and leading-word decoding", ok && decode,
          "ranks " + ranks + "; " + counted(decoded, "decodings")};
}

CriterionResult criterion_positivity() {
  bool ok = true;
  long long expansions = 0, products = 0;
  for (auto& P : posets_up_to(4)) {
    ++expansions;
    auto solved = luoto_expand(wq_expand(bold_F_P(P, P.size()), P.size()), P.size());
    for (auto& [K, c] : solved) ok = ok && c >= 0;
    ok = ok && solved == splitting_expand(P);
  }
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2)
      for (auto& K1 : set_compositions_of(n1))
        for (auto& K2 : set_compositions_of(n2)) {
          ++products;
          for (auto& [K, c] : luoto_product(K1, K2)) ok = ok && c >= 0;
        }
  return {7, "nonnegative basis expansion; expansion oracle agreement; product table", ok,
          counted(expansions, "expansions") + " + " + counted(products, "products")};
}

CriterionResult criterion_collapse() {
  bool ok = true;
  long long checks = 0;
  for (auto& P : posets_up_to(4)) {
    ++checks;
    ok = ok && commutative_projection(bold_F_P(P, P.size())) == F_P(P, P.size());
    for (int m = 0; m <= 3; ++m) {
      ++checks;
      BiPoly h = N_P(P, m);
      ok = ok && commutative_projection(bold_N_P(P, m)) == h.value;
      ok = ok && collapse_to_x(h) == F_P_value_bounded(P, m + 1, m);
    }
  }
  return {8, "commutative and two-alphabet collapses", ok, counted(checks, "identities")};
}

CriterionResult criterion_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool ok = true;
  long long checks = 0;
  std::vector<VarName> cvars = {xvar(1), xvar(2), xvar(3), pvar(1), qvar(1)};
  for (int t = 0; t < 40; ++t) {
    CPoly a = random_cpoly(rng, cvars, 4, 3, 4);
    CPoly b = random_cpoly(rng, cvars, 4, 3, 4);
    CPoly c = random_cpoly(rng, cvars, 4, 3, 4);
    checks += 4;
    ok = ok && (a + b) + c == a + (b + c);
    ok = ok && a * (b + c) == a * b + a * c;
    ok = ok && a * b == b * a;
    ok = ok && (a * b) * c == a * (b * c);
  }
  std::vector<VarName> letters = {bvar(1), dvar(1), bvar(2)};
  for (int t = 0; t < 40; ++t) {
    NCPoly a = random_ncpoly(rng, letters, 3, 3, 3);
    NCPoly b = random_ncpoly(rng, letters, 3, 3, 3);
    NCPoly c = random_ncpoly(rng, letters, 3, 3, 3);
    checks += 3;
    ok = ok && (a + b) + c == a + (b + c);
    ok = ok && a * (b + c) == a * b + a * c;
    ok = ok && (a * b) * c == a * (b * c);
  }
  for (int t = 0; t < 10; ++t) {
    SymSeries s = random_unit_series(rng, 5);
    SymSeries inv = s.inverse();
    checks += 3;
    ok = ok && s * inv == SymSeries::one(5);
    ok = ok && inv * s == SymSeries::one(5);
    ok = ok && inv.inverse() == s;
  }
  std::vector<VarName> subvars = {xvar(1), xvar(2)};
  for (int t = 0; t < 30; ++t) {
    CPoly f = random_cpoly(rng, cvars, 3, 3, 3);
    CPoly g = random_cpoly(rng, cvars, 3, 3, 3);
    std::map<VarName, CPoly> assignment = {
        {xvar(1), random_cpoly(rng, subvars, 2, 2, 2)},
        {xvar(2), random_cpoly(rng, subvars, 2, 2, 2)},
        {pvar(1), random_cpoly(rng, subvars, 2, 2, 2)},
    };
    checks += 2;
    ok = ok && (f * g).substitute(assignment) == f.substitute(assignment) * g.substitute(assignment);
    ok = ok && (f + g).substitute(assignment) == f.substitute(assignment) + g.substitute(assignment);
  }
  std::vector<VarName> aletters = {avar(1), avar(2)};
  for (int t = 0; t < 20; ++t) {
    NCPoly f = random_ncpoly(rng, aletters, 3, 3, 3);
    NCPoly g = random_ncpoly(rng, aletters, 3, 3, 3);
    std::map<VarName, NCPoly> assignment = {
        {avar(1), NCPoly::letter(bvar(1)) + NCPoly::letter(dvar(1))},
        {avar(2), NCPoly::letter(bvar(2))},
    };
    checks += 1;
    ok = ok && (f * g).substitute_letters(assignment) ==
                   f.substitute_letters(assignment) * g.substitute_letters(assignment);
  }
  long long merges = 0;
  for (auto& P : posets_up_to(4))
    for (int m = 1; m <= 3; ++m)
      for (int i = 1; i <= m; ++i) {
        ++merges;
        ok = ok && check_i_avoiding_bijection(P, m, i);
      }
  return {9, "algebra property suites (seeded)", ok,
          counted(checks, "random checks") + " + " + counted(merges, "merge bijections")};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
  return {
      verify_main_corpus(opt),
      criterion_closed_forms(),
      criterion_np_equations(),
      criterion_sx_solutions(),
      criterion_coordinates(),
      criterion_luoto_rank(),
      criterion_positivity(),
      criterion_collapse(),
      criterion_properties(opt.seed),
  };
}

}  // namespace ppart
