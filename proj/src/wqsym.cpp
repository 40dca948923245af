#include "ppart/wqsym.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ppart {

PackedWord pack_word(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  PackedWord out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                              sorted.begin()) +
             1;
  return out;
}

bool is_packed_word(const std::vector<int>& w) {
  int top = 0;
  for (int v : w) {
    if (v < 1) return false;
    top = std::max(top, v);
  }
  std::vector<bool> seen(top + 1, false);
  for (int v : w) seen[v] = true;
  for (int v = 1; v <= top; ++v)
    if (!seen[v]) return false;
  return true;
}

PackedWord word_of_set_composition(const SetComposition& K) {
  PackedWord w(K.ground_size(), 0);
  for (std::size_t j = 0; j < K.blocks.size(); ++j)
    for (int v : K.blocks[j]) w[v - 1] = static_cast<int>(j) + 1;
  return w;
}

SetComposition set_composition_of_word(const PackedWord& w) {
  if (!is_packed_word(w)) throw std::invalid_argument("word is not packed");
  int top = 0;
  for (int v : w) top = std::max(top, v);
  std::vector<std::vector<int>> blocks(top);
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    blocks[w[pos] - 1].push_back(static_cast<int>(pos) + 1);
  return SetComposition(std::move(blocks));
}

std::vector<PackedWord> packed_words_of(int n) {
  std::vector<PackedWord> out;
  for (const SetComposition& K : set_compositions_of(n))
    out.push_back(word_of_set_composition(K));
  return out;
}

long long WQElem::coeff(const PackedWord& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? 0 : it->second;
}

std::string WQElem::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (auto& [w, c] : coeffs) {
    if (!s.empty()) s += " + ";
    std::string key;
    for (int v : w) key += std::to_string(v);
    s += std::to_string(c) + "*[" + key + "]";
  }
  return s;
}

EvaluationVector EvaluationVector::of_word(const Word& w) {
  EvaluationVector ev;
  for (VarName v : w) {
    if (v.family != Family::b && v.family != Family::d)
      throw std::invalid_argument("evaluation vectors are defined on b/d words");
    std::size_t slot = 2 * (v.index - 1) + (v.family == Family::d ? 1 : 0);
    if (ev.counts.size() <= slot) ev.counts.resize(slot + 1, 0);
    ++ev.counts[slot];
  }
  while (!ev.counts.empty() && ev.counts.back() == 0) ev.counts.pop_back();
  return ev;
}

bool EvaluationVector::lex_less(const EvaluationVector& o) const {
  std::size_t len = std::max(counts.size(), o.counts.size());
  for (std::size_t i = 0; i < len; ++i) {
    long long a = i < counts.size() ? counts[i] : 0;
    long long b = i < o.counts.size() ? o.counts[i] : 0;
    if (a != b) return a < b;
  }
  return false;
}

std::string EvaluationVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

NCPoly bold_F_P(const RankedPoset& P, int k) {
  NCPoly out;
  P.for_each_order_map(k, k, [&](const std::vector<int>& r) {
    Word w;
    w.reserve(r.size());
    for (int val : r) w.push_back(avar(val));
    out.add_term(w, 1);
  });
  return out;
}

NCPoly bold_N_P(const RankedPoset& P, int m) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  NCPoly out;
  P.for_each_order_map(m + 1, m, [&](const std::vector<int>& r) {
    Word w;
    w.reserve(r.size());
    for (int v = 1; v <= P.size(); ++v)
      w.push_back(P.odd_height(v) ? dvar(r[v - 1]) : bvar(r[v - 1]));
    out.add_term(w, 1);
  });
  return out;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> word_indices(const Word& w, Family expected) {
  std::vector<int> out;
  out.reserve(w.size());
  for (VarName v : w) {
    if (v.family != expected)
      throw std::invalid_argument("unexpected letter family in word");
    out.push_back(v.index);
  }
  return out;
}

}  // namespace

WQElem wq_expand(const NCPoly& f, int k) {
  WQElem out;
  if (f.is_zero()) return out;
  int n = 0;
  if (!f.is_homogeneous(&n)) throw std::invalid_argument("wq_expand input must be homogeneous");
  if (n > k)
    throw std::invalid_argument("wq_expand needs at least as many letters as the degree");
  out.degree = n;

  std::map<PackedWord, long long> seen_count;
  for (auto& [w, c] : f.terms()) {
    std::vector<int> values = word_indices(w, Family::a);
    for (int v : values)
      if (v > k) throw std::invalid_argument("word uses letters beyond a_1..a_k");
    PackedWord pw = pack_word(values);
    auto [it, inserted] = out.coeffs.emplace(pw, c);
    if (!inserted && it->second != c) throw std::domain_error("not word-quasi-symmetric");
    ++seen_count[pw];
  }
  // every order-preserving relabeling into {1..k} must be present
  for (auto& [pw, c] : out.coeffs) {
    int distinct = pw.empty() ? 0 : *std::max_element(pw.begin(), pw.end());
    if (seen_count[pw] != binomial(k, distinct))
      throw std::domain_error("not word-quasi-symmetric");
  }
  return out;
}

std::pair<EvaluationVector, SetComposition> leading_evaluation(const NCPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("leading evaluation of the zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument("leading evaluation requires a homogeneous input");

  const Word* best = nullptr;
  EvaluationVector best_ev;
  int ties = 0;
  for (auto& [w, c] : f.terms()) {
    EvaluationVector ev = EvaluationVector::of_word(w);
    if (!best || best_ev.lex_less(ev)) {
      best = &w;
      best_ev = ev;
      ties = 1;
    } else if (ev == best_ev) {
      ++ties;
    }
  }
  if (ties > 1)
    throw std::domain_error("leading evaluation is attained by several monomials");

  // decode: b_{j+1} marks block 2j, d_{j+1} marks block 2j+1
  std::vector<std::vector<int>> blocks;
  for (int t = 0;; ++t) {
    VarName letter = (t % 2 == 0) ? bvar(t / 2 + 1) : dvar((t - 1) / 2 + 1);
    std::vector<int> block;
    for (std::size_t pos = 0; pos < best->size(); ++pos)
      if ((*best)[pos] == letter) block.push_back(static_cast<int>(pos) + 1);
    if (block.empty()) break;
    blocks.push_back(std::move(block));
  }
  std::size_t covered = 0;
  for (auto& b : blocks) covered += b.size();
  if (covered != best->size())
    throw std::domain_error("leading monomial does not decode to a set composition");
  return {best_ev, SetComposition(std::move(blocks))};
}

LuotoBasis::LuotoBasis(int n) : n_(n) {
  if (n < 0 || n > 5)
    throw std::invalid_argument("basis expansion is supported for degrees 0..5");
  ks_ = set_compositions_of(n);
  words_ = packed_words_of(n);
  for (std::size_t i = 0; i < words_.size(); ++i) word_index_[words_[i]] = static_cast<int>(i);

  Matrix a(words_.size(), std::vector<Rational>(ks_.size()));
  for (std::size_t col = 0; col < ks_.size(); ++col) {
    WQElem e = wq_expand(bold_F_P(poset_from_set_composition(ks_[col]), n), n);
    for (auto& [w, c] : e.coeffs) a[word_index_.at(w)][col] = c;
    elems_.push_back(std::move(e));
  }
  try {
    solver_.emplace(std::move(a));
  } catch (const std::domain_error&) {
    throw std::logic_error("set-composition basis matrix is singular");
  }
}

std::map<SetComposition, long long> LuotoBasis::expand(const WQElem& f) const {
  if (!f.is_zero() && f.degree != n_)
    throw std::invalid_argument("expansion degree mismatch");
  std::vector<Rational> rhs(words_.size(), 0);
  for (auto& [w, c] : f.coeffs) {
    auto it = word_index_.find(w);
    if (it == word_index_.end()) throw std::invalid_argument("unknown packed word");
    rhs[it->second] = c;
  }
  std::vector<Rational> sol = solver_->solve(std::move(rhs));
  std::map<SetComposition, long long> out;
  for (std::size_t i = 0; i < ks_.size(); ++i) {
    if (sol[i] == 0) continue;
    if (boost::multiprecision::denominator(sol[i]) != 1)
      throw std::logic_error("basis expansion produced a non-integer coefficient");
    out[ks_[i]] =
        boost::multiprecision::numerator(sol[i]).convert_to<long long>();
  }
  return out;
}

int LuotoBasis::rank() const {
  Matrix a(words_.size(), std::vector<Rational>(ks_.size()));
  for (std::size_t col = 0; col < ks_.size(); ++col)
    for (auto& [w, c] : elems_[col].coeffs) a[word_index_.at(w)][col] = c;
  return matrix_rank(std::move(a));
}

const LuotoBasis& luoto_basis(int n) {
  static std::mutex mu;
  static std::map<int, LuotoBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, LuotoBasis(n)).first;
  return it->second;
}

std::map<SetComposition, long long> luoto_expand(const WQElem& f, int n) {
  return luoto_basis(n).expand(f);
}

std::map<SetComposition, long long> splitting_expand(const RankedPoset& P) {
  const int n = P.size();
  std::vector<std::pair<int, int>> inc;
  for (int x : P.even_elements())
    for (int y : P.odd_elements())
      if (!P.less(x, y) && !P.less(y, x)) inc.push_back({x, y});
  if (inc.size() > 24)
    throw std::invalid_argument("too many incomparable pairs for subset splitting");

  struct Edge {
    int u, v, w;  // r(u) + w <= r(v)
  };
  std::vector<Edge> base;
  for (auto [u, v] : P.covers()) base.push_back({u, v, P.odd_height(u) ? 1 : 0});

  std::map<SetComposition, long long> out;
  for (std::uint32_t mask = 0; mask < (1u << inc.size()); ++mask) {
    std::vector<Edge> edges = base;
    for (std::size_t t = 0; t < inc.size(); ++t) {
      auto [x, y] = inc[t];
      if ((mask >> t) & 1)
        edges.push_back({x, y, 0});  // r(x) <= r(y)
      else
        edges.push_back({y, x, 1});  // r(y) < r(x)
    }
    // longest-path potentials; a relaxation surviving n passes means a
    // positive-weight cycle, i.e. an unsatisfiable orientation
    std::vector<long long> pot(n, 0);
    for (int pass = 0; pass < n; ++pass)
      for (auto& e : edges)
        pot[e.v - 1] = std::max(pot[e.v - 1], pot[e.u - 1] + e.w);
    bool satisfiable = true;
    for (auto& e : edges)
      if (pot[e.v - 1] < pot[e.u - 1] + e.w) {
        satisfiable = false;
        break;
      }
    if (!satisfiable) continue;

    // levels of the (acyclic) constraint digraph
    std::vector<int> level(n, 0);
    for (int pass = 0; pass < n; ++pass)
      for (auto& e : edges)
        level[e.v - 1] = std::max(level[e.v - 1], level[e.u - 1] + 1);
    int top = 0;
    for (int v = 0; v < n; ++v) top = std::max(top, level[v]);
    std::vector<std::vector<int>> blocks(top + 1);
    for (int v = 1; v <= n; ++v) blocks[level[v - 1]].push_back(v);

    // structural sanity: the level structure must be a complete-bipartite
    // level poset compatible with the chosen orientation
    for (int v = 1; v <= n; ++v)
      if (level[v - 1] % 2 != P.height(v) % 2)
        throw std::logic_error("augmented level parity mismatch");
    for (int j = 0; j < top; ++j)
      for (int a : blocks[j])
        for (int b : blocks[j + 1]) {
          if (P.less(b, a)) throw std::logic_error("augmented levels contradict the poset");
          bool justified = P.less(a, b);
          if (!justified) {
            for (std::size_t t = 0; t < inc.size() && !justified; ++t) {
              if (inc[t] == std::make_pair(a, b)) justified = (mask >> t) & 1;
              if (inc[t] == std::make_pair(b, a)) justified = !((mask >> t) & 1);
            }
          }
          if (!justified)
            throw std::logic_error("augmented level structure is not complete bipartite");
        }
    out[SetComposition(std::move(blocks))] += 1;
  }
  return out;
}

std::map<SetComposition, long long> luoto_product(const SetComposition& k1,
                                                  const SetComposition& k2) {
  RankedPoset p1 = poset_from_set_composition(k1);
  RankedPoset p2 = poset_from_set_composition(k2);
  RankedPoset u = disjoint_union_shifted(p1, p2);
  const int n = u.size();
  NCPoly whole = bold_F_P(u, n);
  if (!(bold_F_P(p1, n) * bold_F_P(p2, n) == whole))
    throw std::logic_error("concatenation product disagrees with the union series");
  return luoto_expand(wq_expand(whole, n), n);
}

CPoly commutative_projection(const NCPoly& f) {
  CPoly out;
  for (auto& [w, c] : f.terms()) {
    std::vector<std::pair<VarName, int>> factors;
    for (VarName v : w) {
      Family target;
      switch (v.family) {
        case Family::a: target = Family::x; break;
        case Family::b: target = Family::p; break;
        case Family::d: target = Family::q; break;
        default: target = v.family; break;
      }
      factors.push_back({{target, v.index}, 1});
    }
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

std::map<VarName, NCPoly> virtual_letter_assignment(int m) {
  if (m < 0) throw std::invalid_argument("level m must be nonnegative");
  std::map<VarName, NCPoly> assignment;
  for (int j = 1; j <= 2 * m + 1; ++j) {
    NCPoly img;
    if (j % 2 == 1) {
      int i = (j - 1) / 2;
      for (int t = i + 1; t <= m; ++t) img += NCPoly::letter(dvar(t));
      for (int t = i + 1; t <= m + 1; ++t) img += NCPoly::letter(bvar(t));
    } else {
      int i = j / 2;
      for (int t = i; t <= m; ++t) img += NCPoly::letter(dvar(t));
      for (int t = i + 1; t <= m + 1; ++t) img += NCPoly::letter(bvar(t));
    }
    assignment[avar(j)] = std::move(img);
  }
  return assignment;
}

}  // namespace ppart
