#include "wld/associahedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace wld {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational triangle_area(const Point& a, const Point& b, const Point& c) {
  return Rational(a.x * b.y - a.x * c.y + b.x * c.y - b.x * a.y + c.x * a.y -
                  c.x * b.y) /
         2;
}

PolygonRealization::PolygonRealization(std::vector<Point> corners)
    : corners_(std::move(corners)) {
  const int m = n();
  if (m < 3) throw GeometryError("a polygon needs at least 3 corners");
  for (int s = 0; s < m; ++s) {
    const Point& a = corners_[s];
    const Point& b = corners_[(s + 1) % m];
    for (int v = 0; v < m; ++v) {
      if (v == s || v == (s + 1) % m) continue;
      if (sgn(cross(a, b, corners_[v])) <= 0) {
        throw GeometryError(
            "corners are not in strictly convex counterclockwise position");
      }
    }
  }
}

Rational PolygonRealization::area(int i, int j, int l) const {
  return abs(triangle_area(corner(i), corner(j), corner(l)));
}

Rational PolygonRealization::polygon_area() const {
  Rational twice = 0;
  for (int i = 0; i < n(); ++i) {
    const Point& a = corners_[i];
    const Point& b = corners_[(i + 1) % n()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

PolygonRealization default_polygon(int n) {
  if (n < 3) throw GeometryError("a polygon needs at least 3 corners");
  std::vector<Point> corners;
  for (int i = 1; i <= n; ++i) corners.push_back({i, i * i});
  return PolygonRealization(std::move(corners));
}

std::vector<std::array<int, 3>> triangles_of(const PolygonDissection& t) {
  if (!t.is_triangulation()) {
    throw GeometryError("dissection is not a triangulation");
  }
  std::vector<std::array<int, 3>> out;
  for (const auto& face : internal_faces(t)) {
    out.push_back({face[0], face[1], face[2]});
  }
  return out;
}

RationalVector secondary_vertex(const PolygonRealization& poly,
                                const PolygonDissection& t) {
  if (t.n() != poly.n()) throw GeometryError("polygon size mismatch");
  RationalVector s(static_cast<std::size_t>(poly.n()), 0);
  for (const auto& tri : triangles_of(t)) {
    Rational a = poly.area(tri[0], tri[1], tri[2]);
    for (int corner : tri) s[corner - 1] += a;
  }
  return s;
}

namespace {

bool in_cyclic_order(int n, std::array<int, 4> q) {
  // Rotate so the smallest label comes first; the rest must then increase.
  auto low = std::min_element(q.begin(), q.end());
  std::rotate(q.begin(), low, q.end());
  for (int x : q) {
    if (x < 1 || x > n) return false;
  }
  return q[0] < q[1] && q[1] < q[2] && q[2] < q[3];
}

}  // namespace

RationalVector edge_direction(const PolygonRealization& poly, int i, int j,
                              int k, int l) {
  if (!in_cyclic_order(poly.n(), {i, j, k, l})) {
    throw GeometryError("quadrilateral corners must be distinct and cyclic");
  }
  RationalVector v(static_cast<std::size_t>(poly.n()), 0);
  v[i - 1] = -poly.area(j, k, l);
  v[j - 1] = poly.area(i, k, l);
  v[k - 1] = -poly.area(i, j, l);
  v[l - 1] = poly.area(i, j, k);
  return v;
}

SecondaryFace face_of(const PolygonRealization& poly,
                      const PolygonDissection& dissection) {
  if (dissection.n() != poly.n()) throw GeometryError("polygon size mismatch");
  SecondaryFace face{dissection, {}, {}, {}, {}};

  std::vector<std::vector<std::vector<Chord>>> choices;
  for (const auto& f : internal_faces(dissection)) {
    if (f.size() < 4) continue;
    choices.push_back(polygon_triangulations(f));
    const int m = static_cast<int>(f.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          for (int d = c + 1; d < m; ++d) {
            face.bounding_quads.push_back({f[a], f[b], f[c], f[d]});
          }
        }
      }
    }
  }
  std::sort(face.bounding_quads.begin(), face.bounding_quads.end());

  std::vector<Chord> current = dissection.diagonals();
  std::function<void(std::size_t)> expand = [&](std::size_t idx) {
    if (idx == choices.size()) {
      face.triangulations.emplace_back(dissection.n(), current);
      return;
    }
    for (const auto& t : choices[idx]) {
      std::size_t mark = current.size();
      current.insert(current.end(), t.begin(), t.end());
      expand(idx + 1);
      current.resize(mark);
    }
  };
  expand(0);
  std::sort(face.triangulations.begin(), face.triangulations.end());
  for (const auto& t : face.triangulations) {
    face.vertices.push_back(secondary_vertex(poly, t));
  }

  RationalMatrix differences;
  for (std::size_t v = 1; v < face.vertices.size(); ++v) {
    RationalVector diff = face.vertices[v];
    for (std::size_t c = 0; c < diff.size(); ++c) {
      diff[c] -= face.vertices.front()[c];
    }
    differences.push_back(std::move(diff));
  }
  face.direction_span = row_span_basis(std::move(differences));

  RationalMatrix edges;
  for (const auto& q : face.bounding_quads) {
    edges.push_back(edge_direction(poly, q[0], q[1], q[2], q[3]));
  }
  if (row_span_basis(std::move(edges)) != face.direction_span) {
    throw std::logic_error(
        "edge directions and vertex differences span different spaces");
  }
  return face;
}

RationalVector omega_plus(const PolygonRealization& poly, const Chord& chord,
                          ChordSide side) {
  const int n = poly.n();
  Chord c = Chord::of(chord.a, chord.b);
  if (c.a < 1 || c.b > n || c.a == c.b || is_polygon_side(n, c)) {
    throw GeometryError("omega_plus needs a diagonal of the polygon");
  }
  auto on_side = [&](int v) {
    bool between = v > c.a && v < c.b;
    return side == ChordSide::kBetween ? between
                                       : (v < c.a || v > c.b);
  };
  RationalVector w(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    if (on_side(v)) w[v - 1] = 2 * poly.area(v, c.a, c.b);
  }

  auto closed_side = [&](int v) { return v == c.a || v == c.b || on_side(v); };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          bool same_side = (closed_side(i) && closed_side(j) &&
                            closed_side(k) && closed_side(l));
          if (!same_side) continue;
          if (sgn(dot(w, edge_direction(poly, i, j, k, l))) != 0) {
            throw std::logic_error("omega_plus is not normal to a face edge");
          }
        }
      }
    }
  }
  return w;
}

std::vector<RationalVector> translation_signature(const SecondaryFace& face) {
  const RationalVector& base =
      *std::min_element(face.vertices.begin(), face.vertices.end());
  std::vector<RationalVector> out;
  out.reserve(face.vertices.size());
  for (const auto& v : face.vertices) {
    RationalVector diff = v;
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= base[c];
    out.push_back(std::move(diff));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool faces_parallel(const PolygonRealization& poly, const PolygonDissection& d1,
                    const PolygonDissection& d2) {
  if (d1.n() != d2.n()) throw GeometryError("dissections of different sizes");
  if (d1 == d2) return true;
  SecondaryFace f1 = face_of(poly, d1);
  SecondaryFace f2 = face_of(poly, d2);
  if (f1.vertices.size() != f2.vertices.size() ||
      f1.direction_span != f2.direction_span) {
    return false;
  }
  return translation_signature(f1) == translation_signature(f2);
}

std::vector<ParallelClass> parallel_classes(int n) {
  if (n < 4 || n > 9) {
    throw GeometryError("parallel face counting is limited to 4 <= n <= 9");
  }
  PolygonRealization poly = default_polygon(n);
  std::map<std::vector<RationalVector>, ParallelClass> groups;
  for_each_dissection(n, std::nullopt, [&](const PolygonDissection& d) {
    SecondaryFace face = face_of(poly, d);
    auto [it, inserted] =
        groups.try_emplace(translation_signature(face),
                           ParallelClass{d, 0, face.dimension()});
    // Dissections arrive in lexicographic order, so the first one seen is
    // the least.
    ++it->second.members;
  });
  std::vector<ParallelClass> out;
  for (auto& [sig, cls] : groups) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const ParallelClass& a, const ParallelClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

std::size_t count_nonparallel_faces(int n) { return parallel_classes(n).size(); }

}  // namespace wld
