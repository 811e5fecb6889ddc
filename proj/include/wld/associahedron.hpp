#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "wld/dissection.hpp"
#include "wld/rational.hpp"

namespace wld {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point {
  Rational x;
  Rational y;
};

/// Twice the signed area of triangle abc; positive when counterclockwise.
Rational cross(const Point& a, const Point& b, const Point& c);

/// Signed shoelace area of triangle abc.
Rational triangle_area(const Point& a, const Point& b, const Point& c);

/// Corners x_1..x_n of a convex polygon, counterclockwise, no three
/// collinear.
class PolygonRealization {
 public:
  /// Throws GeometryError unless every corner lies strictly to the left of
  /// every side it is not on.
  explicit PolygonRealization(std::vector<Point> corners);

  int n() const { return static_cast<int>(corners_.size()); }
  /// 1-based.
  const Point& corner(int i) const { return corners_.at(i - 1); }
  const std::vector<Point>& corners() const { return corners_; }

  /// Unsigned area of the triangle on corners i, j, l (1-based).
  Rational area(int i, int j, int l) const;
  Rational polygon_area() const;

 private:
  std::vector<Point> corners_;
};

/// The corners (i, i^2), i = 1..n.
PolygonRealization default_polygon(int n);

/// Triangles of a triangulation as sorted corner triples.
std::vector<std::array<int, 3>> triangles_of(const PolygonDissection& t);

/// s_t: coordinate i sums the areas of the triangles of t that touch x_i.
RationalVector secondary_vertex(const PolygonRealization& poly,
                                const PolygonDissection& t);

/// Direction of the associahedron edge that flips the diagonal i-k of the
/// quadrilateral (i, j, k, l) to j-l:
/// (-a(j,k,l), a(i,k,l), -a(i,j,l), a(i,j,k)) on coordinates i, j, k, l.
/// The corners must be distinct and in cyclic order.
RationalVector edge_direction(const PolygonRealization& poly, int i, int j,
                              int k, int l);

struct SecondaryFace {
  PolygonDissection dissection;
  /// s_t of every triangulation refining the dissection, paired with it.
  std::vector<PolygonDissection> triangulations;
  std::vector<RationalVector> vertices;
  /// Reduced row echelon basis of span{s_t - s_t0}.
  RationalMatrix direction_span;
  /// Quadrilaterals inside the non-triangle faces, corners increasing.
  std::vector<std::array<int, 4>> bounding_quads;

  int dimension() const { return static_cast<int>(direction_span.size()); }
};

/// Builds the face for a dissection and checks that the edge directions of
/// its quadrilaterals span the same space as its vertex differences
/// (throws std::logic_error if not).
SecondaryFace face_of(const PolygonRealization& poly,
                      const PolygonDissection& dissection);

/// Which side of the chord a-b (a < b) to weight.
enum class ChordSide {
  kBetween,  // corners a+1 .. b-1
  kBeyond,   // corners b+1 .. n, 1 .. a-1
};

/// One-sided normal for faces containing the diagonal: coordinate i is
/// twice the unsigned area of (x_i, x_a, x_b) for corners strictly on the
/// chosen side, 0 elsewhere. This is the distance to the chord scaled by
/// its length, a positive multiple per chord.
///
/// Checks orthogonality against every quadrilateral that lies on one
/// closed side of the chord, which covers the edge directions of every
/// face whose dissection contains it (throws std::logic_error if not).
RationalVector omega_plus(const PolygonRealization& poly, const Chord& chord,
                          ChordSide side);

/// Translation-invariant fingerprint of a face: its vertices minus the
/// lexicographically least one, sorted. Parallel faces share it.
std::vector<RationalVector> translation_signature(const SecondaryFace& face);

/// Whether one face is a translate of the other.
bool faces_parallel(const PolygonRealization& poly, const PolygonDissection& d1,
                    const PolygonDissection& d2);

struct ParallelClass {
  PolygonDissection representative;  // lexicographically least member
  std::size_t members = 0;
  int dimension = 0;
};

/// Groups all dissections of the n-gon (on default_polygon(n)) into
/// parallelism classes of faces, ordered by representative. Requires
/// 4 <= n <= 9.
std::vector<ParallelClass> parallel_classes(int n);
std::size_t count_nonparallel_faces(int n);

}  // namespace wld
