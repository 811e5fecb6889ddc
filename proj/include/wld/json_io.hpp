#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wld/dissection.hpp"
#include "wld/matroid.hpp"

namespace wld {

/// Malformed input text or structure. Diagram-level problems (a vertex out
/// of range, n < 3) surface as DiagramError instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// {"n": 8, "propagators": [[1,4],[2,4],[5,8]]}. Pairs may come in either
/// order; a repeated pair is a ParseError.
WilsonLoopDiagram diagram_from_json(const Json& j);
WilsonLoopDiagram parse_diagram(const std::string& text);
Json to_json(const WilsonLoopDiagram& d);

/// {"n": 8, "diagonals": [[1,4],[2,4],[5,8],[5,7]]}
PolygonDissection dissection_from_json(const Json& j);
Json to_json(const PolygonDissection& p);

/// {"n": 8, "rank": 3, "bases": [[1,2,4], ...]}, bases in lexicographic
/// order. A "ground" list is added when the ground set is not 1..n.
Json to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json to_json(VertexSet s);
Json to_json(const Chord& c);
/// {"vertices": [...], "diagonals": [...], "trivial": bool}
Json to_json(const TriangulatedPiece& piece);
Json to_json(const MaximalDecomposition& dec);

}  // namespace wld
