#include "ppart/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppart {

char family_char(Family f) {
  switch (f) {
    case Family::x: return 'x';
    case Family::p: return 'p';
    case Family::q: return 'q';
    case Family::a: return 'a';
    case Family::b: return 'b';
    case Family::d: return 'd';
  }
  throw std::logic_error("unknown variable family");
}

Family family_from_char(char c) {
  switch (c) {
    case 'x': return Family::x;
    case 'p': return Family::p;
    case 'q': return Family::q;
    case 'a': return Family::a;
    case 'b': return Family::b;
    case 'd': return Family::d;
    default: throw std::invalid_argument(std::string("unknown variable family '") + c + "'");
  }
}

std::pair<int, long long> VarName::sort_key() const {
  switch (family) {
    case Family::x: return {0, index};
    case Family::p: return {1, index};
    case Family::q: return {2, index};
    case Family::a: return {3, index};
    case Family::b: return {4, 2LL * index};
    case Family::d: return {4, 2LL * index + 1};
  }
  throw std::logic_error("unknown variable family");
}

std::string VarName::to_string() const {
  return std::string(1, family_char(family)) + std::to_string(index);
}

Monomial Monomial::variable(VarName v, int exp) {
  if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
  if (exp < 0) throw std::invalid_argument("exponent must be nonnegative");
  Monomial m;
  if (exp > 0) {
    m.f_.push_back({v, exp});
    m.deg_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarName, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : factors) {
    if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
    if (e < 0) throw std::invalid_argument("exponent must be nonnegative");
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.push_back({v, e});
    m.deg_ += e;
  }
  return m;
}

int Monomial::exponent(VarName v) const {
  for (auto& [u, e] : f_)
    if (u == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first < o.f_[j].first)
      r.f_.push_back(f_[i++]);
    else if (o.f_[j].first < f_[i].first)
      r.f_.push_back(o.f_[j++]);
    else {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i, ++j;
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  r.deg_ = deg_ + o.deg_;
  return r;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (i) s += "*";
    s += f_[i].first.to_string();
    if (f_[i].second > 1) s += "^" + std::to_string(f_[i].second);
  }
  return s;
}

CPoly::CPoly(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

CPoly CPoly::variable(VarName v, int exp) { return term(Monomial::variable(v, exp), 1); }

CPoly CPoly::term(const Monomial& m, long long c) {
  CPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

long long CPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int CPoly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool CPoly::is_homogeneous(int* degree_out) const {
  int d = terms_.empty() ? 0 : terms_.begin()->first.degree();
  for (auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

std::vector<VarName> CPoly::variables() const {
  std::vector<VarName> vars;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.factors()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void CPoly::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, checked_neg(c));
  return *this;
}

CPoly CPoly::operator-() const {
  CPoly r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, checked_neg(c));
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
  return r;
}

CPoly CPoly::substitute(const std::map<VarName, CPoly>& assignment) const {
  std::map<std::pair<VarName, int>, CPoly> powers;
  auto power_of = [&](VarName v, int e) -> const CPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto a = assignment.find(v);
    CPoly base = (a == assignment.end()) ? CPoly::variable(v) : a->second;
    return powers.emplace(key, base.pow(e)).first->second;
  };
  CPoly out;
  for (auto& [m, c] : terms_) {
    CPoly t{c};
    for (auto& [v, e] : m.factors()) t *= power_of(v, e);
    out += t;
  }
  return out;
}

CPoly CPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  CPoly r{1};
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    long long a = c;
    if (s.empty()) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (m.empty())
      s += std::to_string(a);
    else if (a == 1)
      s += m.to_string();
    else
      s += std::to_string(a) + "*" + m.to_string();
  }
  return s;
}

NCPoly::NCPoly(long long c) {
  if (c != 0) terms_.emplace(Word{}, c);
}

NCPoly NCPoly::letter(VarName v) { return term(Word{v}, 1); }

NCPoly NCPoly::term(const Word& w, long long c) {
  NCPoly p;
  if (c != 0) p.terms_.emplace(w, c);
  return p;
}

long long NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

int NCPoly::degree() const {
  int d = 0;
  for (auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

bool NCPoly::is_homogeneous(int* degree_out) const {
  std::size_t d = terms_.empty() ? 0 : terms_.begin()->first.size();
  for (auto& [w, c] : terms_)
    if (w.size() != d) return false;
  if (degree_out) *degree_out = static_cast<int>(d);
  return true;
}

void NCPoly::add_term(const Word& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (auto& [w, c] : o.terms_) add_term(w, checked_neg(c));
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (auto& [w, c] : terms_) r.terms_.emplace(w, checked_neg(c));
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (auto& [wa, ca] : a.terms_)
    for (auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, checked_mul(ca, cb));
    }
  return r;
}

NCPoly NCPoly::substitute_letters(const std::map<VarName, NCPoly>& assignment) const {
  for (auto& [v, img] : assignment)
    for (auto& [w, c] : img.terms())
      if (w.size() != 1)
        throw std::invalid_argument("letter substitution image must be a sum of single letters");
  NCPoly out;
  for (auto& [w, c] : terms_) {
    NCPoly t{c};
    for (VarName v : w) {
      auto it = assignment.find(v);
      t = t * (it == assignment.end() ? NCPoly::letter(v) : it->second);
    }
    out += t;
  }
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [w, c] : terms_) {
    long long a = c;
    if (s.empty()) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) mono += "*";
      mono += w[i].to_string();
    }
    if (w.empty())
      s += std::to_string(a);
    else if (a == 1)
      s += mono;
    else
      s += std::to_string(a) + "*" + mono;
  }
  return s;
}

SymSeries::SymSeries(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

SymSeries SymSeries::one(int cap) {
  SymSeries s(cap);
  s.coeffs_.emplace(Composition{}, CPoly{1});
  return s;
}

SymSeries SymSeries::sigma(const CPoly& t, int cap) {
  SymSeries s(cap);
  for (int k = 0; k <= cap; ++k) {
    Composition I = (k == 0) ? Composition{} : Composition{std::vector<int>{k}};
    s.add_term(I, t.pow(k));
  }
  return s;
}

const CPoly& SymSeries::coeff(const Composition& I) const {
  static const CPoly zero;
  auto it = coeffs_.find(I);
  return it == coeffs_.end() ? zero : it->second;
}

void SymSeries::add_term(const Composition& I, const CPoly& c) {
  if (c.is_zero() || I.weight() > cap_) return;
  auto [it, inserted] = coeffs_.emplace(I, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymSeries SymSeries::operator+(const SymSeries& o) const {
  if (cap_ != o.cap_) throw std::invalid_argument("series caps differ");
  SymSeries r = *this;
  for (auto& [I, c] : o.coeffs_) r.add_term(I, c);
  return r;
}

SymSeries SymSeries::operator-(const SymSeries& o) const {
  if (cap_ != o.cap_) throw std::invalid_argument("series caps differ");
  SymSeries r = *this;
  for (auto& [I, c] : o.coeffs_) r.add_term(I, -c);
  return r;
}

SymSeries SymSeries::operator*(const SymSeries& o) const {
  if (cap_ != o.cap_) throw std::invalid_argument("series caps differ");
  SymSeries r(cap_);
  for (auto& [I, ci] : coeffs_) {
    for (auto& [J, cj] : o.coeffs_) {
      if (I.weight() + J.weight() > cap_) continue;
      std::vector<int> parts = I.parts;
      parts.insert(parts.end(), J.parts.begin(), J.parts.end());
      r.add_term(Composition(std::move(parts)), ci * cj);
    }
  }
  return r;
}

SymSeries SymSeries::inverse() const {
  if (!(coeff(Composition{}) == CPoly{1}))
    throw std::invalid_argument("series inverse requires constant term 1");
  SymSeries u = SymSeries::one(cap_) - *this;  // weight >= 1 terms only
  SymSeries r = SymSeries::one(cap_);
  SymSeries pw = SymSeries::one(cap_);
  for (int k = 1; k <= cap_; ++k) {
    pw = pw * u;
    r = r + pw;
  }
  return r;
}

std::string SymSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto& [I, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*S" + I.to_string();
  }
  return s;
}

}  // namespace ppart
