#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "ppart/algebra.hpp"
#include "ppart/combinatorics.hpp"
#include "ppart/posets.hpp"
#include "ppart/qsym.hpp"
#include "ppart/report.hpp"
#include "ppart/wqsym.hpp"

namespace ppart {

using Json = nlohmann::json;

// Encodings used by the CLI and the file formats.  Parsers validate and
// throw std::invalid_argument (or propagate nlohmann parse errors) on bad
// input.  Serialization is canonical: term order is the graded-lex map
// order, object keys are emitted sorted, so identical inputs produce
// byte-identical output.

Json partition_to_json(const Partition& p);              // [4,4,2]
Partition partition_from_json(const Json& j);

Json composition_to_json(const Composition& c);          // [2,1]
Composition composition_from_json(const Json& j);

Json set_composition_to_json(const SetComposition& k);   // [[2,3],[1,5]]
SetComposition set_composition_from_json(const Json& j);

Json interlacing_to_json(const InterlacingCoords& x);    // [4,2,0,-1,-3]
InterlacingCoords interlacing_from_json(const Json& j);

Json multirect_to_json(const MultirectCoords& pq);       // {"p":[...],"q":[...]}
MultirectCoords multirect_from_json(const Json& j);

Json poset_to_json(const RankedPoset& p);                // {"n":6,"covers":[[2,1],...]}
RankedPoset poset_from_json(const Json& j);

// {"terms":[{"coef":-1,"mono":[["x",1,2],["x",3,1]]}]}
Json cpoly_to_json(const CPoly& f);
CPoly cpoly_from_json(const Json& j);

// {"terms":[{"coef":1,"word":[["b",1],["d",2]]}]}
Json ncpoly_to_json(const NCPoly& f);
NCPoly ncpoly_from_json(const Json& j);

Json qsym_to_json(const QSymElem& f);                    // {"(2,1)":3}
QSymElem qsym_from_json(const Json& j);

// {"112":1}; packed words are digit strings, so degrees are capped at 9
Json wq_to_json(const WQElem& f);
WQElem wq_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

Json expansion_to_json(const std::map<SetComposition, long long>& e);

// FNV-1a of a canonical dump; used as the inputs digest in run reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ppart
