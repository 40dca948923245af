#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppart/json_io.hpp"
#include "ppart/superqsym.hpp"

using namespace ppart;

TEST_CASE("scalar shapes round trip") {
  Partition lam{{4, 4, 2}};
  CHECK(partition_from_json(partition_to_json(lam)) == lam);
  CHECK(partition_to_json(lam).dump() == "[4,4,2]");

  Composition I{{2, 1}};
  CHECK(composition_from_json(composition_to_json(I)) == I);

  SetComposition K({{2, 3}, {1, 5}, {6}, {4}});
  CHECK(set_composition_from_json(set_composition_to_json(K)) == K);
  CHECK(set_composition_to_json(K).dump() == "[[2,3],[1,5],[6],[4]]");

  InterlacingCoords xs{{4, 2, 0, -1, -3}};
  CHECK(interlacing_from_json(interlacing_to_json(xs)) == xs);

  MultirectCoords pq({2, 1, -3}, {2, 2});
  CHECK(multirect_from_json(multirect_to_json(pq)) == pq);
  CHECK(multirect_to_json(pq).dump() == "{\"p\":[2,1,-3],\"q\":[2,2]}");
}

TEST_CASE("poset schema") {
  RankedPoset fig(6, {{2, 1}, {2, 5}, {3, 1}, {3, 5}, {1, 6}, {5, 6}, {6, 4}});
  Json j = poset_to_json(fig);
  CHECK(poset_from_json(j) == fig);
  CHECK(j.dump() == "{\"covers\":[[1,6],[2,1],[2,5],[3,1],[3,5],[5,6],[6,4]],\"n\":6}");
  CHECK_THROWS_AS(poset_from_json(Json::parse("{\"n\":2,\"covers\":[[1,2],[2,1]]}")),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json(Json::parse("{\"n\":2}")), std::invalid_argument);
}

TEST_CASE("polynomial schemas") {
  CPoly f = CPoly::term(Monomial::variable(xvar(1), 2) * Monomial::variable(xvar(3)), -1) +
            CPoly::term(Monomial::variable(pvar(1)), 3) + CPoly{7};
  Json j = cpoly_to_json(f);
  CHECK(cpoly_from_json(j) == f);
  // canonical graded-lex term order, byte-stable
  CHECK(j.dump() == cpoly_to_json(cpoly_from_json(j)).dump());
  CHECK(j.dump() ==
        "{\"terms\":[{\"coef\":7,\"mono\":[]},{\"coef\":3,\"mono\":[[\"p\",1,1]]},"
        "{\"coef\":-1,\"mono\":[[\"x\",1,2],[\"x\",3,1]]}]}");

  NCPoly g = NCPoly::term({bvar(1), dvar(2)}, 1) - NCPoly::term({dvar(2), bvar(1)}, 1);
  CHECK(ncpoly_from_json(ncpoly_to_json(g)) == g);

  CHECK_THROWS_AS(cpoly_from_json(Json::parse("{\"terms\":[{\"coef\":1,\"mono\":[[\"z\",1,1]]}]}")),
                  std::invalid_argument);
  CHECK_THROWS_AS(cpoly_from_json(Json::parse("{}")), std::invalid_argument);
}

TEST_CASE("qsym and wqsym schemas") {
  QSymElem F;
  F.add(Composition{{2, 1}}, 3);
  F.add(Composition{{1, 1, 1}}, 1);
  Json j = qsym_to_json(F);
  CHECK(qsym_from_json(j) == F);
  CHECK(j.dump() == "{\"(1,1,1)\":1,\"(2,1)\":3}");

  WQElem w;
  w.degree = 3;
  w.coeffs[{1, 1, 2}] = 1;
  w.coeffs[{1, 2, 1}] = -2;
  Json jw = wq_to_json(w);
  CHECK(wq_from_json(jw) == w);
  CHECK(jw.dump() == "{\"112\":1,\"121\":-2}");
  CHECK_THROWS_AS(wq_from_json(Json::parse("{\"13\":1}")), std::invalid_argument);
}

TEST_CASE("reports and expansions") {
  CheckReport r;
  r.cells.push_back({1, 1, "q=0", true});
  r.cells.push_back({2, 1, "p=0", false});
  Json j = report_to_json(r);
  CHECK(j["all_ok"] == false);
  CHECK(j["cells"].size() == 2);

  std::map<SetComposition, long long> e;
  e[SetComposition({{1, 2}})] = 1;
  CHECK(expansion_to_json(e).dump() == "[{\"K\":[[1,2]],\"coeff\":1}]");
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
  CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
}
