#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "constellation/betti.hpp"
#include "constellation/complex.hpp"
#include "constellation/gale.hpp"
#include "constellation/polytope.hpp"

namespace constellation {

using Json = nlohmann::ordered_json;

// Parse errors are rethrown as Error naming the source and the line/column.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// {"m": int, "maximal_faces": [[...]]} or {"m": int, "minimal_nonfaces": [[...]]}.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

// {"vertices": [["0","1/2"], ...]}; integers are accepted in place of strings.
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);

// {"dim": int, "points": [["1","0"], ...]}.
PointConfiguration configuration_from_json(const Json& j);
Json configuration_to_json(const PointConfiguration& x);

// {"field": "gf2", "entries": [{"i": 1, "deg": 6, "value": 5}, ...]}.
Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j, int m);

Json rational_vector_to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j, const std::string& where);

// "0,2,5" (0-based) -> {0, 2, 5}; the empty string is the empty set.
VertexSet parse_vertex_list(std::string_view text);

}  // namespace constellation
