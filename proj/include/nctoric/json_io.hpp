#pragma once

#include <string_view>

#include "json.hpp"
#include "nctoric/fan.hpp"
#include "nctoric/hochschild.hpp"
#include "nctoric/lvm.hpp"
#include "nctoric/polytope.hpp"

namespace nctoric {

/// Keys are kept sorted, so serialization is canonical.
using Json = nlohmann::json;

/// Exact literal: integers, p/q, sqrt(n), parentheses, unary minus and the
/// operators + - *. Decimal points are rejected. Throws InputError.
Scalar parse_scalar_literal(std::string_view text);

/// {"a":"p/q","b":"r/s","d":n}
Json scalar_to_json(const Scalar& x);
/// Accepts the object form or a literal string. Throws InputError.
Scalar scalar_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json integers_to_json(const std::vector<Integer>& v);
Json int_matrix_to_json(const IntMatrix& m);
Json rational_to_json(const Rational& q);

/// Index sets shift to 1-based on output.
Json index_family_to_json(const IndexFamily& f);
Json index_set_to_json(const IndexSet& s);

/// {"dim":n,"facets":[{"normal":[...],"offset":...}]}
SimplePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const SimplePolytope& p);

/// {"dim":n,"rays":[[...]]}
Cone cone_from_json(const Json& j);
Json cone_to_json(const Cone& c);

/// {"dim":n,"cones":[{"rays":[[...]]}],"complete":bool}
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);

/// {"m":m,"lambdas":[[{"re":...,"im":...}]]}
Configuration configuration_from_json(const Json& j);

/// {"dim":D,"labels":[...],"unit":[...],"c":[[[q...]...]...]}
FinDimAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const FinDimAlgebra& a);

/// Parses text as JSON; throws InputError on syntax errors.
Json parse_json(std::string_view text);

}  // namespace nctoric
