#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ppart/json_io.hpp"
#include "ppart/superqsym.hpp"
#include "ppart/verify.hpp"
#include "ppart/wqsym.hpp"

namespace {

using ppart::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ppart::RankedPoset load_poset(const std::string& path) {
  return ppart::poset_from_json(Json::parse(read_source(path)));
}

void emit(const Json& j, const std::string& format, const std::string& text) {
  if (format == "text")
    std::cout << text << "\n";
  else
    std::cout << j.dump() << "\n";
}

std::string cells_text(const ppart::CheckReport& r) {
  return r.to_string() + (r.all_ok() ? "all cells pass" : "FAILURES PRESENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact P-partition generating series, quasi-symmetric calculus, "
               "Young-diagram coordinates and set-composition bases"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string poset_path = "-";
  std::string composition_json;
  std::string partition_json;
  std::string xs_json;
  std::string input_path = "-";
  int vars = 0, m = 0, k = 0;
  int n_max = 4, m_max = 2;
  int random_count = 0;
  int random_count_all = 200;
  std::uint64_t seed = 20250810ULL;
  std::string k1_json, k2_json;

  auto* fp = app.add_subcommand("fp", "one-alphabet generating series of a ranked poset");
  fp->add_option("--poset", poset_path, "poset JSON file or -")->required();
  fp->add_option("--vars", vars, "variable count")->required();

  auto* np = app.add_subcommand("np", "two-alphabet generating series at level m");
  np->add_option("--poset", poset_path)->required();
  np->add_option("--m", m, "level")->required();

  auto* boldfp = app.add_subcommand("boldfp", "noncommutative one-alphabet series");
  boldfp->add_option("--poset", poset_path)->required();
  boldfp->add_option("--k", k, "letter count")->required();

  auto* boldnp = app.add_subcommand("boldnp", "noncommutative two-alphabet series");
  boldnp->add_option("--poset", poset_path)->required();
  boldnp->add_option("--m", m, "level")->required();

  auto* mi = app.add_subcommand("mi", "monomial quasi-symmetric truncation");
  mi->add_option("--composition", composition_json, "composition, e.g. [2,1]")->required();
  mi->add_option("--vars", vars)->required();

  auto* miv = app.add_subcommand("mi-virtual", "virtual evaluation of a monomial element");
  miv->add_option("--composition", composition_json)->required();
  miv->add_option("--m", m)->required();

  auto* subst = app.add_subcommand("subst-pq", "rewrite a polynomial in x_1..x_{2m+1} "
                                               "into the p/q variables");
  subst->add_option("--input", input_path, "polynomial JSON file or -");
  subst->add_option("--m", m)->required();

  auto* coords = app.add_subcommand("coords", "diagram coordinate conversions");
  coords->add_option("--partition", partition_json, "partition, e.g. [4,4,2]");
  coords->add_option("--x", xs_json, "interlacing coordinates, e.g. [8,6,4,3,1]");

  auto* lexp = app.add_subcommand("luoto-expand", "set-composition basis expansion of a "
                                                  "poset series");
  lexp->add_option("--poset", poset_path)->required();

  auto* lprod = app.add_subcommand("luoto-product", "basis expansion of a product");
  lprod->add_option("K1", k1_json, "first set composition, e.g. [[1]]")->required();
  lprod->add_option("K2", k2_json, "second set composition, e.g. [[1],[2]]")->required();

  auto* csx = app.add_subcommand("check-sx", "merge-equation checker for a virtual "
                                             "monomial family");
  csx->add_option("--composition", composition_json)->required();
  csx->add_option("--m-max", m_max)->required();

  auto* cspq = app.add_subcommand("check-spq", "p/q functional-equation checker for a "
                                               "poset's two-alphabet family");
  cspq->add_option("--poset", poset_path)->required();
  cspq->add_option("--m-max", m_max)->required();

  auto* vmain = app.add_subcommand("verify-main", "reconstruction identity, single poset "
                                                  "or corpus");
  vmain->add_option("--poset", poset_path);
  vmain->add_option("--m", m);
  vmain->add_option("--n-max", n_max);
  vmain->add_option("--m-max", m_max);
  vmain->add_option("--random-count", random_count);
  vmain->add_option("--seed", seed);

  auto* vall = app.add_subcommand("verify-all", "full verification battery");
  vall->add_option("--n-max", n_max);
  vall->add_option("--m-max", m_max);
  vall->add_option("--random-count", random_count_all);
  vall->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_note = [&] {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "# elapsed_ms=" << ms << "\n";
  };
  try {
    if (*fp) {
      ppart::CPoly f = ppart::F_P(load_poset(poset_path), vars);
      emit(ppart::cpoly_to_json(f), format, f.to_string());
    } else if (*np) {
      ppart::BiPoly h = ppart::N_P(load_poset(poset_path), m);
      emit(ppart::cpoly_to_json(h.value), format, h.value.to_string());
    } else if (*boldfp) {
      ppart::NCPoly f = ppart::bold_F_P(load_poset(poset_path), k);
      emit(ppart::ncpoly_to_json(f), format, f.to_string());
    } else if (*boldnp) {
      ppart::NCPoly f = ppart::bold_N_P(load_poset(poset_path), m);
      emit(ppart::ncpoly_to_json(f), format, f.to_string());
    } else if (*mi) {
      ppart::Composition I = ppart::composition_from_json(Json::parse(composition_json));
      ppart::CPoly f = ppart::monomial_M(I, vars);
      emit(ppart::cpoly_to_json(f), format, f.to_string());
    } else if (*miv) {
      ppart::Composition I = ppart::composition_from_json(Json::parse(composition_json));
      ppart::CPoly f = ppart::monomial_M_virtual(I, m).value;
      emit(ppart::cpoly_to_json(f), format, f.to_string());
    } else if (*subst) {
      ppart::CPoly f = ppart::cpoly_from_json(Json::parse(read_source(input_path)));
      ppart::CPoly g = ppart::substitute_x_to_pq(ppart::VirtualEval(m, f));
      emit(ppart::cpoly_to_json(g), format, g.to_string());
    } else if (*coords) {
      if (partition_json.empty() == xs_json.empty())
        throw std::invalid_argument("coords needs exactly one of --partition, --x");
      if (!partition_json.empty()) {
        ppart::Partition lam = ppart::partition_from_json(Json::parse(partition_json));
        ppart::InterlacingCoords xs = ppart::interlacing_from_partition(lam);
        ppart::MultirectCoords pq = ppart::multirect_from_interlacing(xs);
        Json out{{"x", ppart::interlacing_to_json(xs)},
                 {"p", pq.p},
                 {"q", pq.q}};
        emit(out, format,
             "x = " + xs.to_string() + "\np/q = " + ppart::multirect_to_json(pq).dump());
      } else {
        ppart::InterlacingCoords xs = ppart::interlacing_from_json(Json::parse(xs_json));
        auto [lam, c] = ppart::partition_from_interlacing(xs);
        ppart::MultirectCoords pq = ppart::multirect_from_interlacing(xs);
        Json out{{"partition", ppart::partition_to_json(lam)},
                 {"center", c},
                 {"p", pq.p},
                 {"q", pq.q}};
        emit(out, format,
             "partition = " + lam.to_string() + ", center = " + std::to_string(c));
      }
    } else if (*lexp) {
      ppart::RankedPoset P = load_poset(poset_path);
      auto e = ppart::luoto_expand(
          ppart::wq_expand(ppart::bold_F_P(P, P.size()), P.size()), P.size());
      emit(ppart::expansion_to_json(e), format, ppart::expansion_to_json(e).dump(2));
    } else if (*lprod) {
      ppart::SetComposition k1 = ppart::set_composition_from_json(Json::parse(k1_json));
      ppart::SetComposition k2 = ppart::set_composition_from_json(Json::parse(k2_json));
      auto e = ppart::luoto_product(k1, k2);
      emit(ppart::expansion_to_json(e), format, ppart::expansion_to_json(e).dump(2));
    } else if (*csx) {
      ppart::Composition I = ppart::composition_from_json(Json::parse(composition_json));
      std::vector<ppart::CPoly> family;
      for (int level = 0; level <= m_max; ++level)
        family.push_back(ppart::monomial_M_virtual(I, level).value);
      ppart::CheckReport r = ppart::check_Sx_membership(family);
      Json out = ppart::report_to_json(r);
      out["command"] = "check-sx";
      out["inputs_digest"] = ppart::fnv1a_hex(composition_json + "|" + std::to_string(m_max));
      emit(out, format, cells_text(r));
      elapsed_note();
      return r.all_ok() ? kExitOk : kExitVerifyFailed;
    } else if (*cspq) {
      ppart::RankedPoset P = load_poset(poset_path);
      std::vector<ppart::BiPoly> family;
      for (int level = 0; level <= m_max; ++level) family.push_back(ppart::N_P(P, level));
      ppart::CheckReport r = ppart::check_Spq_membership(family);
      Json out = ppart::report_to_json(r);
      out["command"] = "check-spq";
      out["inputs_digest"] = ppart::fnv1a_hex(ppart::poset_to_json(P).dump());
      out["corpus_size"] = 1;
      emit(out, format, cells_text(r));
      elapsed_note();
      return r.all_ok() ? kExitOk : kExitVerifyFailed;
    } else if (*vmain) {
      if (vmain->count("--poset")) {
        ppart::RankedPoset P = load_poset(poset_path);
        bool ok = ppart::verify_main_theorem(P, m);
        Json out{{"command", "verify-main"},
                 {"m", m},
                 {"ok", ok},
                 {"inputs_digest", ppart::fnv1a_hex(ppart::poset_to_json(P).dump())}};
        emit(out, format, ok ? "identity holds" : "IDENTITY FAILS");
        elapsed_note();
        return ok ? kExitOk : kExitVerifyFailed;
      }
      ppart::VerifyOptions opt;
      opt.n_max = n_max;
      opt.m_max = m_max;
      opt.random_count = random_count;
      opt.seed = seed;
      ppart::CriterionResult r = ppart::verify_main_corpus(opt);
      Json out{{"command", "verify-main"},      {"n_max", n_max},
               {"m_max", m_max},                {"random_count", random_count},
               {"corpus_size", r.corpus_size},  {"pass", r.pass},
               {"detail", r.detail}};
      emit(out, format, (r.pass ? "PASS " : "FAIL ") + r.detail);
      elapsed_note();
      return r.pass ? kExitOk : kExitVerifyFailed;
    } else if (*vall) {
      ppart::VerifyOptions opt;
      opt.n_max = n_max;
      opt.m_max = m_max;
      opt.random_count = random_count_all;
      opt.seed = seed;
      auto results = ppart::run_acceptance(opt);
      bool all = true;
      Json arr = Json::array();
      for (auto& r : results) {
        all = all && r.pass;
        arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (format == "text")
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                    << r.detail << ")\n";
      }
      if (format != "text")
        std::cout << Json{{"command", "verify-all"}, {"criteria", arr}, {"all_pass", all}}.dump()
                  << "\n";
      elapsed_note();
      return all ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
