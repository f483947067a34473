#pragma once

#include <json.hpp>

#include "reflex/fan.hpp"
#include "reflex/geom.hpp"
#include "reflex/poly.hpp"
#include "reflex/tri.hpp"

namespace reflex {

using Json = nlohmann::ordered_json;

// {"vertices": [[ints]]}; read/write round-trips exactly.
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

// {"points": [[ints]], "simplices": [[indices]]}; index 0 is the origin for
// the reflexive pipelines.
Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

// {"rays": [[ints]], "max_cones": [[ray indices]]}.
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

// Exponent -> exact coefficient string.
Json poly_to_json(const GradedPoly& p);
// [[i, j, coeff-string], ...] in lex order.
Json poly2_to_json(const Poly2& p);

Json int_vec_to_json(const std::vector<Int>& v);

}  // namespace reflex
