#include "ppart/json_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace ppart {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Json partition_to_json(const Partition& p) { return Json(p.rows); }

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Json composition_to_json(const Composition& c) { return Json(c.parts); }

Composition composition_from_json(const Json& j) {
  return Composition(int_array(j, "composition"));
}

Json set_composition_to_json(const SetComposition& k) {
  Json out = Json::array();
  for (const auto& b : k.blocks) out.push_back(b);
  return out;
}

SetComposition set_composition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("set composition: expected an array of arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) blocks.push_back(int_array(b, "set composition block"));
  return SetComposition(std::move(blocks));
}

Json interlacing_to_json(const InterlacingCoords& x) { return Json(x.xs); }

InterlacingCoords interlacing_from_json(const Json& j) {
  return InterlacingCoords(int_array(j, "interlacing coordinates"));
}

Json multirect_to_json(const MultirectCoords& pq) {
  return Json{{"p", pq.p}, {"q", pq.q}};
}

MultirectCoords multirect_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw std::invalid_argument("multirectangular coordinates: expected {\"p\":[...],\"q\":[...]}");
  return MultirectCoords(int_array(j.at("p"), "p"), int_array(j.at("q"), "q"));
}

Json poset_to_json(const RankedPoset& p) {
  Json covers = Json::array();
  for (auto [u, v] : p.covers()) covers.push_back(Json::array({u, v}));
  return Json{{"n", p.size()}, {"covers", covers}};
}

RankedPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw std::invalid_argument("poset: expected {\"n\":..., \"covers\":[[u,v],...]}");
  if (!j.at("n").is_number_integer()) throw std::invalid_argument("poset: n must be an integer");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    auto pair = int_array(c, "cover");
    if (pair.size() != 2) throw std::invalid_argument("poset: covers must be pairs");
    covers.push_back({pair[0], pair[1]});
  }
  return RankedPoset(n, std::move(covers));
}

namespace {

Json mono_to_json(const Monomial& m) {
  Json out = Json::array();
  for (auto& [v, e] : m.factors())
    out.push_back(Json::array({std::string(1, family_char(v.family)), v.index, e}));
  return out;
}

Monomial mono_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial: expected an array of triples");
  std::vector<std::pair<VarName, int>> factors;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || t[0].get<std::string>().size() != 1)
      throw std::invalid_argument("monomial: expected [family, index, exponent] triples");
    VarName v{family_from_char(t[0].get<std::string>()[0]), t[1].get<int>()};
    int e = t[2].get<int>();
    if (v.index < 1 || e < 1) throw std::invalid_argument("monomial: index and exponent must be >= 1");
    factors.push_back({v, e});
  }
  return Monomial::from_factors(std::move(factors));
}

}  // namespace

Json cpoly_to_json(const CPoly& f) {
  Json terms = Json::array();
  for (auto& [m, c] : f.terms())
    terms.push_back(Json{{"coef", c}, {"mono", mono_to_json(m)}});
  return Json{{"terms", terms}};
}

CPoly cpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("polynomial: expected {\"terms\":[...]}");
  CPoly out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("mono"))
      throw std::invalid_argument("polynomial term: expected {\"coef\":..., \"mono\":[...]}");
    out.add_term(mono_from_json(t.at("mono")), t.at("coef").get<long long>());
  }
  return out;
}

Json ncpoly_to_json(const NCPoly& f) {
  Json terms = Json::array();
  for (auto& [w, c] : f.terms()) {
    Json word = Json::array();
    for (VarName v : w)
      word.push_back(Json::array({std::string(1, family_char(v.family)), v.index}));
    terms.push_back(Json{{"coef", c}, {"word", word}});
  }
  return Json{{"terms", terms}};
}

NCPoly ncpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("polynomial: expected {\"terms\":[...]}");
  NCPoly out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("word"))
      throw std::invalid_argument("polynomial term: expected {\"coef\":..., \"word\":[...]}");
    Word w;
    for (const auto& l : t.at("word")) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_string() || l[0].get<std::string>().size() != 1)
        throw std::invalid_argument("word: expected [family, index] pairs");
      VarName v{family_from_char(l[0].get<std::string>()[0]), l[1].get<int>()};
      if (v.index < 1) throw std::invalid_argument("word: index must be >= 1");
      w.push_back(v);
    }
    out.add_term(w, t.at("coef").get<long long>());
  }
  return out;
}

Json qsym_to_json(const QSymElem& f) {
  Json out = Json::object();
  for (auto& [I, c] : f.coeffs) out[I.to_string()] = c;
  return out;
}

QSymElem qsym_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("qsym element: expected an object");
  QSymElem out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key.size() < 2 || key.front() != '(' || key.back() != ')')
      throw std::invalid_argument("qsym key must look like \"(2,1)\"");
    std::vector<int> parts;
    std::string body = key.substr(1, key.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      parts.push_back(std::stoi(body.substr(pos, next - pos)));
      pos = next + 1;
    }
    out.add(Composition(std::move(parts)), it.value().get<long long>());
  }
  return out;
}

Json wq_to_json(const WQElem& f) {
  if (f.degree > 9)
    throw std::invalid_argument("packed-word keys are digit strings; degree is capped at 9");
  Json out = Json::object();
  for (auto& [w, c] : f.coeffs) {
    std::string key;
    for (int v : w) key += static_cast<char>('0' + v);
    out[key] = c;
  }
  return out;
}

WQElem wq_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("wqsym element: expected an object");
  WQElem out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    PackedWord w;
    for (char ch : it.key()) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("packed words are digit strings over 1..9");
      w.push_back(ch - '0');
    }
    if (!w.empty() && !is_packed_word(w))
      throw std::invalid_argument("key is not a packed word");
    long long c = it.value().get<long long>();
    if (c == 0) continue;
    out.degree = static_cast<int>(w.size());
    out.coeffs[w] = c;
  }
  for (auto& [w, c] : out.coeffs)
    if (static_cast<int>(w.size()) != out.degree)
      throw std::invalid_argument("wqsym element must be homogeneous");
  return out;
}

Json report_to_json(const CheckReport& r) {
  Json cells = Json::array();
  for (auto& c : r.cells)
    cells.push_back(Json{{"m", c.m}, {"i", c.i}, {"kind", c.kind}, {"ok", c.ok}});
  return Json{{"cells", cells}, {"all_ok", r.all_ok()}};
}

Json expansion_to_json(const std::map<SetComposition, long long>& e) {
  Json out = Json::array();
  for (auto& [k, c] : e)
    out.push_back(Json{{"K", set_composition_to_json(k)}, {"coeff", c}});
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace ppart
