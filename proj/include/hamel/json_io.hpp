#ifndef HAMEL_JSON_IO_HPP
#define HAMEL_JSON_IO_HPP

#include <json.hpp>

#include "hamel/cardinal.hpp"
#include "hamel/diffop.hpp"
#include "hamel/finsupp.hpp"
#include "hamel/functional.hpp"
#include "hamel/operators.hpp"
#include "hamel/polynomial.hpp"

namespace hamel {

/// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

// Schemas (scalars always serialized as strings, never as JSON numbers):
//   FinSuppVec   {"field":"Q"|"Qi"|"GF(p)", "entries":[[index, "scalar"],...]}
//                index: string (atom) or array of naturals (tuple)
//   Functional   {"dims":d, "horizon":N|null, "field":..., "moments":[[[b...],"scalar"],...]}
//   Operator     {"dims":d, "shift":s, "field":..., "default":"identity"|"zero",
//                 "columns":[[[b...], FinSuppVec],...]}
//   DiffOp       {"dims":d, "field":..., "terms":[[[gamma...],[alpha...],"scalar"],...]}
//   Polynomial   {"dims":d, "field":..., "terms":[[[m...],"scalar"],...]}
//   PointDist    {"dims":d, "field":..., "atoms":[[["q",...],[b...],"scalar"],...]}
//   Piecewise    {"pieces":[[ "lo","hi",["c0","c1",...]],...]}
//   Family       {"dims":d, "entries":[[[b...],{"num":[...],"den":[...]}],...]}

Json to_json(const Index& i);
Index index_from_json(const Json& j);

Json to_json(const FinSuppVec& v);
FinSuppVec finsupp_from_json(const Json& j);

Json to_json(const Functional& f);
Functional functional_from_json(const Json& j);

Json to_json(const ColumnFiniteOperator& op); // explicit columns only
ColumnFiniteOperator operator_from_json(const Json& j);

Json to_json(const DiffOp& p);
DiffOp diffop_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const PointDistribution& d);
PointDistribution point_distribution_from_json(const Json& j);

Json to_json(const PiecewisePolynomial& f);
PiecewisePolynomial piecewise_from_json(const Json& j);

Json to_json(const ParametricMomentFamily& fam);
ParametricMomentFamily family_from_json(const Json& j);

Json to_json(const RegularityReport& rep);

Json to_json(const SpaceCardinalities& row);

/// Machine-readable error object: {"error":{"kind":..., "message":...}}.
Json error_to_json(const Error& e);

} // namespace hamel

#endif
