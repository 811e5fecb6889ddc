#include "wld/dissection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace wld {

bool chords_cross(const Chord& c, const Chord& d) {
  return (c.a < d.a && d.a < c.b && c.b < d.b) ||
         (d.a < c.a && c.a < d.b && d.b < c.b);
}

bool is_polygon_side(int n, const Chord& c) {
  return c.b == c.a + 1 || (c.a == 1 && c.b == n);
}

namespace {

std::string describe(const Chord& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

/// Empty string when valid, otherwise the reason.
std::string dissection_problem(int n, std::vector<Chord>& diagonals) {
  if (n < 3) return "a polygon needs at least 3 corners";
  if (n > kMaxSetSize) return "polygons are limited to 64 corners";
  for (auto& c : diagonals) {
    c = Chord::of(c.a, c.b);
    if (c.a < 1 || c.b > n) return "diagonal " + describe(c) + " out of range";
    if (c.a == c.b) return "diagonal endpoints must differ";
    if (is_polygon_side(n, c)) {
      return describe(c) + " is a side of the polygon, not a diagonal";
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) !=
      diagonals.end()) {
    return "duplicate diagonal";
  }
  for (std::size_t x = 0; x < diagonals.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals.size(); ++y) {
      if (chords_cross(diagonals[x], diagonals[y])) {
        return "diagonals " + describe(diagonals[x]) + " and " +
               describe(diagonals[y]) + " cross";
      }
    }
  }
  return {};
}

}  // namespace

PolygonDissection::PolygonDissection(int n, std::vector<Chord> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  std::string problem = dissection_problem(n_, diagonals_);
  if (!problem.empty()) throw DissectionError(problem);
}

bool PolygonDissection::has_diagonal(const Chord& c) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(),
                            Chord::of(c.a, c.b));
}

bool is_valid_dissection(int n, const std::vector<Chord>& diagonals) {
  std::vector<Chord> copy = diagonals;
  return dissection_problem(n, copy).empty();
}

PolygonDissection tau(const WilsonLoopDiagram& d) {
  if (!is_weakly_admissible(d)) {
    throw DissectionError("tau needs a weakly admissible diagram");
  }
  std::vector<Chord> diagonals;
  diagonals.reserve(d.propagators().size());
  for (const auto& p : d.propagators()) diagonals.push_back({p.i(), p.j()});
  return {d.n(), std::move(diagonals)};
}

WilsonLoopDiagram tau_inverse(const PolygonDissection& p) {
  // Propagators are recorded by the pair of edges they sit on, so the order
  // of several propagators along one shared edge is implicit in the
  // noncrossing placement and needs no extra data.
  std::vector<Propagator> props;
  props.reserve(p.diagonals().size());
  for (const auto& c : p.diagonals()) props.emplace_back(c.a, c.b);
  return {p.n(), std::move(props)};
}

std::vector<std::vector<int>> internal_faces(const PolygonDissection& p) {
  std::vector<int> all(static_cast<std::size_t>(p.n()));
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<int>> faces{all};
  // Each diagonal lies inside exactly one current face and splits it.
  for (const auto& c : p.diagonals()) {
    for (auto& face : faces) {
      bool has_a = std::binary_search(face.begin(), face.end(), c.a);
      bool has_b = std::binary_search(face.begin(), face.end(), c.b);
      if (!has_a || !has_b) continue;
      std::vector<int> inside;
      std::vector<int> outside;
      for (int v : face) {
        if (v >= c.a && v <= c.b) inside.push_back(v);
        if (v <= c.a || v >= c.b) outside.push_back(v);
      }
      face = std::move(inside);
      faces.push_back(std::move(outside));
      break;
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

namespace {

std::vector<Chord> face_edges(const std::vector<int>& face) {
  std::vector<Chord> out;
  for (std::size_t i = 0; i < face.size(); ++i) {
    out.push_back(Chord::of(face[i], face[(i + 1) % face.size()]));
  }
  return out;
}

Chord side(int n, int i) { return Chord::of(i, i == n ? 1 : i + 1); }

}  // namespace

int DualTree::degree(int node) const {
  int deg = 0;
  for (const auto& e : edges) deg += (e.u == node) + (e.v == node);
  return deg;
}

bool DualTree::is_tree() const {
  if (edges.size() + 1 != nodes.size()) return false;
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges) {
    int ru = find(e.u);
    int rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

DualTree dual_tree(const PolygonDissection& p) {
  DualTree tree;
  auto faces = internal_faces(p);
  std::map<Chord, std::vector<int>> faces_of_edge;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    tree.nodes.push_back({true, faces[f]});
    for (const auto& e : face_edges(faces[f])) {
      faces_of_edge[e].push_back(static_cast<int>(f));
    }
  }
  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    Chord s = side(n, i);
    int leaf = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({false, {s.a, s.b}});
    tree.edges.push_back({faces_of_edge.at(s).front(), leaf, s});
  }
  for (const auto& c : p.diagonals()) {
    const auto& pair = faces_of_edge.at(c);
    tree.edges.push_back({pair.at(0), pair.at(1), c});
  }
  return tree;
}

int TriangulatedPiece::boundary_arcs(int n) const {
  if (corners.size() == n) return 0;
  int arcs = 0;
  for (int v : corners) {
    int prev = v == 1 ? n : v - 1;
    if (!corners.contains(prev)) ++arcs;
  }
  return arcs;
}

MaximalDecomposition maximal_decomposition(const PolygonDissection& p) {
  DualTree tree = dual_tree(p);
  const int edge_count = static_cast<int>(tree.edges.size());
  std::vector<int> parent(static_cast<std::size_t>(edge_count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  // Tree edges stay together only through triangle nodes; every larger face
  // is split apart.
  std::vector<std::vector<int>> incident(tree.nodes.size());
  for (int e = 0; e < edge_count; ++e) {
    incident[tree.edges[e].u].push_back(e);
    incident[tree.edges[e].v].push_back(e);
  }
  std::vector<bool> touches_triangle(static_cast<std::size_t>(edge_count));
  for (std::size_t node = 0; node < tree.nodes.size(); ++node) {
    const auto& nd = tree.nodes[node];
    if (!nd.is_face || nd.corners.size() != 3) continue;
    for (int e : incident[node]) {
      touches_triangle[e] = true;
      parent[find(e)] = find(incident[node].front());
    }
  }

  std::map<int, std::vector<int>> components;
  for (int e = 0; e < edge_count; ++e) components[find(e)].push_back(e);

  MaximalDecomposition out;
  for (const auto& [root, members] : components) {
    TriangulatedPiece piece;
    bool triangle = false;
    for (int e : members) {
      const Chord& c = tree.edges[e].crossed;
      piece.corners.insert(c.a);
      piece.corners.insert(c.b);
      triangle = triangle || touches_triangle[e];
      if (is_polygon_side(p.n(), c)) {
        piece.sides.push_back(c);
      } else {
        piece.diagonals.push_back(c);
      }
    }
    if (piece.diagonals.empty()) {
      // Loose sides, or the bare triangle when n = 3.
      out.loose_sides.insert(out.loose_sides.end(), piece.sides.begin(),
                             piece.sides.end());
      continue;
    }
    piece.trivial = !triangle;
    std::sort(piece.diagonals.begin(), piece.diagonals.end());
    std::sort(piece.sides.begin(), piece.sides.end());
    out.pieces.push_back(std::move(piece));
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const TriangulatedPiece& x, const TriangulatedPiece& y) {
              return lex_compare(x.corners, y.corners) < 0;
            });
  std::sort(out.loose_sides.begin(), out.loose_sides.end());
  return out;
}

std::vector<PropagatorSet> exact_subdiagrams(const WilsonLoopDiagram& d) {
  std::vector<PropagatorSet> out;
  for (const auto& piece : maximal_decomposition(tau(d)).pieces) {
    PropagatorSet set;
    for (const auto& c : piece.diagonals) {
      set.insert(d.index_of(Propagator(c.a, c.b)));
    }
    out.push_back(set);
  }
  return out;
}

bool PieceSubgraph::is_triangulated_piece() const {
  const int m = corners.size();
  if (m == 2) return diagonals.size() == 1 && sides.empty();
  if (m < 3) return false;
  std::vector<Chord> edges = diagonals;
  edges.insert(edges.end(), sides.begin(), sides.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) {
    if (!corners.contains(e.a) || !corners.contains(e.b)) return false;
  }
  // A polygon triangulation on m corners: the hull cycle plus m - 3 chords.
  if (static_cast<int>(edges.size()) != 2 * m - 3) return false;
  std::vector<int> cs = corners.to_vector();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Chord hull = Chord::of(cs[i], cs[(i + 1) % cs.size()]);
    if (!std::binary_search(edges.begin(), edges.end(), hull)) return false;
  }
  return true;
}

PieceSubgraph piece_subgraph(const WilsonLoopDiagram& d, PropagatorSet subset) {
  VertexSet support_set = vertex_support(d, subset);
  PieceSubgraph out;
  for (int v : support_set) {
    if (support_set.contains(d.next(v))) out.corners.insert(v);
  }
  for (int idx : subset) {
    const auto& p = d.propagator(idx);
    out.diagonals.push_back({p.i(), p.j()});
  }
  for (int v : out.corners) {
    int w = d.next(v);
    if (out.corners.contains(w)) out.sides.push_back(Chord::of(v, w));
  }
  std::sort(out.diagonals.begin(), out.diagonals.end());
  std::sort(out.sides.begin(), out.sides.end());
  return out;
}

std::vector<VertexSet> equivalence_key(const WilsonLoopDiagram& d) {
  std::vector<VertexSet> key;
  for (const auto& piece : maximal_decomposition(tau(d)).pieces) {
    key.push_back(piece.corners);
  }
  return key;  // already in corner-set order
}

bool equivalent(const WilsonLoopDiagram& d1, const WilsonLoopDiagram& d2) {
  if (d1.n() != d2.n()) {
    throw DissectionError("diagrams have different vertex counts");
  }
  return equivalence_key(d1) == equivalence_key(d2);
}

mpz_class catalan(int m) {
  if (m < 0) throw std::invalid_argument("negative Catalan index");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2UL * static_cast<unsigned long>(m),
               static_cast<unsigned long>(m));
  return binom / (m + 1);
}

mpz_class equivalence_class_size(const WilsonLoopDiagram& d) {
  mpz_class total = 1;
  for (const auto& piece : maximal_decomposition(tau(d)).pieces) {
    total *= catalan(piece.corners.size() - 2);
  }
  return total;
}

std::vector<std::vector<Chord>> polygon_triangulations(
    const std::vector<int>& corners) {
  const std::size_t m = corners.size();
  if (m < 3) return {{}};
  std::vector<std::vector<Chord>> out;
  // The side (first, last) lies in exactly one triangle, with apex `k`.
  for (std::size_t k = 1; k + 1 < m; ++k) {
    std::vector<int> left(corners.begin(), corners.begin() + k + 1);
    std::vector<int> right(corners.begin() + k, corners.end());
    auto left_all = polygon_triangulations(left);
    auto right_all = polygon_triangulations(right);
    for (const auto& l : left_all) {
      for (const auto& r : right_all) {
        std::vector<Chord> t = l;
        t.insert(t.end(), r.begin(), r.end());
        if (k > 1) t.push_back(Chord::of(corners.front(), corners[k]));
        if (k + 2 < m) t.push_back(Chord::of(corners[k], corners.back()));
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WilsonLoopDiagram> equivalence_class(const WilsonLoopDiagram& d) {
  PolygonDissection p = tau(d);
  MaximalDecomposition dec = maximal_decomposition(p);

  // Diagonals on a piece's hull are fixed; only the interior ones vary.
  std::vector<Chord> fixed;
  std::vector<std::vector<std::vector<Chord>>> choices;
  for (const auto& piece : dec.pieces) {
    std::vector<int> cs = piece.corners.to_vector();
    std::vector<Chord> hull;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      hull.push_back(Chord::of(cs[i], cs[(i + 1) % cs.size()]));
    }
    std::sort(hull.begin(), hull.end());
    for (const auto& c : piece.diagonals) {
      if (std::binary_search(hull.begin(), hull.end(), c)) fixed.push_back(c);
    }
    if (cs.size() >= 4) choices.push_back(polygon_triangulations(cs));
  }

  std::vector<WilsonLoopDiagram> out;
  std::vector<Chord> current = fixed;
  std::function<void(std::size_t)> expand = [&](std::size_t piece) {
    if (piece == choices.size()) {
      out.push_back(tau_inverse(PolygonDissection(p.n(), current)));
      return;
    }
    for (const auto& t : choices[piece]) {
      std::size_t mark = current.size();
      current.insert(current.end(), t.begin(), t.end());
      expand(piece + 1);
      current.resize(mark);
    }
  };
  expand(0);
  std::sort(out.begin(), out.end());
  return out;
}

WilsonLoopDiagram class_representative(const WilsonLoopDiagram& d) {
  return equivalence_class(d).front();
}

void for_each_dissection(
    int n, std::optional<int> k,
    const std::function<void(const PolygonDissection&)>& fn) {
  if (n < 3) throw DissectionError("a polygon needs at least 3 corners");
  std::vector<Chord> candidates;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) {
      if (!(a == 1 && b == n)) candidates.push_back({a, b});
    }
  }
  std::vector<Chord> chosen;
  // Emitting a set before its extensions, with extensions in increasing
  // order, yields lexicographic order of the sorted lists.
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!k || static_cast<int>(chosen.size()) == *k) {
      fn(PolygonDissection(n, chosen));
    }
    if (k && static_cast<int>(chosen.size()) >= *k) return;
    for (std::size_t c = from; c < candidates.size(); ++c) {
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](const Chord& x) {
        return chords_cross(x, candidates[c]);
      });
      if (!ok) continue;
      chosen.push_back(candidates[c]);
      grow(c + 1);
      chosen.pop_back();
    }
  };
  grow(0);
}

std::vector<PolygonDissection> enumerate_dissections(int n,
                                                     std::optional<int> k) {
  std::vector<PolygonDissection> out;
  for_each_dissection(n, k,
                      [&](const PolygonDissection& p) { out.push_back(p); });
  return out;
}

std::vector<WilsonLoopDiagram> enumerate_weakly_admissible(
    int n, std::optional<int> k) {
  std::vector<WilsonLoopDiagram> out;
  for_each_dissection(
      n, k, [&](const PolygonDissection& p) { out.push_back(tau_inverse(p)); });
  return out;
}

}  // namespace wld
