#pragma once

// JSON forms of the library's data. Algebraic numbers are strings such as
// "-1/2*r2"; integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise. Cosets and generators are 1-based in JSON.

#include <json.hpp>

#include "vinwit/coxeter.hpp"
#include "vinwit/geometry.hpp"
#include "vinwit/subgroups.hpp"
#include "vinwit/vinberg.hpp"
#include "vinwit/zariski.hpp"

namespace vinwit {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const AlgNum& a);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const AlgMatrix& m);
Json to_json(const IntPolynomial& p);

Integer integer_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
AlgMatrix alg_matrix_from_json(const Json& j);

/// Accepts a bare matrix or {"cartan": matrix}; entries numbers or strings.
CartanMatrix cartan_from_json(const Json& j);
Json cartan_to_json(const CartanMatrix& a);

Json to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const Json& j);

Json word_json(const Word& w);         // 1-based generator indices
Json free_word_json(const FreeWord& w);  // signed 1-based letters

Json to_json(const SignatureReport& s);
Json to_json(const CartanTypeResult& t);
Json to_json(const ArithmeticityReport& r);
Json to_json(const RelationReport& r);
Json to_json(const std::vector<CompatibilityEntry>& audit);
Json to_json(const DensityCertificate& c);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
Json to_json(const CosetTable& t);
CosetTable coset_table_from_json(const Json& j);
Json to_json(const AbelianizationReport& a);
Json to_json(const Epimorphism& e);
Json to_json(const SubgroupFinding& f);
Json to_json(const TorsionReport& r);

Json to_json(const ProperWitness& w);

/// Compact text for a JSON document: pretty-printed with two-space indent.
std::string dump(const Json& j);

}  // namespace vinwit
