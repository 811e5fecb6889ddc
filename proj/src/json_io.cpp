#include "wld/json_io.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace wld {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("missing array field \"") + key + "\"");
  }
  std::vector<std::pair<int, int>> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& item : j.at(key)) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError(std::string("entries of \"") + key +
                       "\" must be two-element arrays");
    }
    int a = as_int(item[0], "vertex");
    int b = as_int(item[1], "vertex");
    std::pair<int, int> canonical{std::min(a, b), std::max(a, b)};
    if (!seen.insert(canonical).second) {
      throw ParseError("duplicate pair [" + std::to_string(canonical.first) +
                       "," + std::to_string(canonical.second) + "]");
    }
    out.push_back(canonical);
  }
  return out;
}

int read_n(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n")) throw ParseError("missing field \"n\"");
  return as_int(j.at("n"), "n");
}

}  // namespace

WilsonLoopDiagram diagram_from_json(const Json& j) {
  int n = read_n(j);
  std::vector<Propagator> props;
  for (auto [a, b] : read_pairs(j, "propagators")) props.emplace_back(a, b);
  return {n, std::move(props)};
}

WilsonLoopDiagram parse_diagram(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return diagram_from_json(j);
}

Json to_json(const WilsonLoopDiagram& d) {
  Json props = Json::array();
  for (const auto& p : d.propagators()) props.push_back({p.i(), p.j()});
  return {{"n", d.n()}, {"propagators", props}};
}

PolygonDissection dissection_from_json(const Json& j) {
  int n = read_n(j);
  std::vector<Chord> diagonals;
  for (auto [a, b] : read_pairs(j, "diagonals")) diagonals.push_back({a, b});
  return {n, std::move(diagonals)};
}

Json to_json(const PolygonDissection& p) {
  Json diagonals = Json::array();
  for (const auto& c : p.diagonals()) diagonals.push_back(to_json(c));
  return {{"n", p.n()}, {"diagonals", diagonals}};
}

Json to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v);
  return out;
}

Json to_json(const Chord& c) { return Json::array({c.a, c.b}); }

Json to_json(const Matroid& m) {
  const int n = m.ground().max_element();
  Json bases = Json::array();
  for (VertexSet b : m.bases()) bases.push_back(to_json(b));
  Json out{{"n", std::max(n, 0)}, {"rank", m.rank()}, {"bases", bases}};
  if (m.ground() != VertexSet::range(std::max(n, 0))) {
    out["ground"] = to_json(m.ground());
  }
  return out;
}

Matroid matroid_from_json(const Json& j) {
  int n = read_n(j);
  if (!j.contains("bases") || !j.at("bases").is_array()) {
    throw ParseError("missing array field \"bases\"");
  }
  VertexSet ground = VertexSet::range(n);
  if (j.contains("ground")) {
    ground = VertexSet{};
    for (const auto& v : j.at("ground")) ground.insert(as_int(v, "label"));
  }
  std::vector<VertexSet> bases;
  for (const auto& b : j.at("bases")) {
    if (!b.is_array()) throw ParseError("bases must be arrays");
    VertexSet s;
    for (const auto& v : b) s.insert(as_int(v, "label"));
    bases.push_back(s);
  }
  Matroid m(ground, std::move(bases));
  if (!satisfies_basis_exchange(m)) {
    throw ParseError("bases violate the exchange axiom");
  }
  return m;
}

Json to_json(const TriangulatedPiece& piece) {
  Json diagonals = Json::array();
  for (const auto& c : piece.diagonals) diagonals.push_back(to_json(c));
  return {{"vertices", to_json(piece.corners)},
          {"diagonals", diagonals},
          {"trivial", piece.trivial}};
}

Json to_json(const MaximalDecomposition& dec) {
  Json pieces = Json::array();
  for (const auto& p : dec.pieces) pieces.push_back(to_json(p));
  Json sides = Json::array();
  for (const auto& c : dec.loose_sides) sides.push_back(to_json(c));
  return {{"pieces", pieces}, {"loose_sides", sides}};
}

}  // namespace wld
