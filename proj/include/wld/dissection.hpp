#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/index_set.hpp"

namespace wld {

class DissectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A segment between two polygon corners, stored with a < b. Used for
/// diagonals and for polygon sides alike.
struct Chord {
  int a;
  int b;

  static Chord of(int x, int y) { return x < y ? Chord{x, y} : Chord{y, x}; }

  friend auto operator<=>(const Chord&, const Chord&) = default;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// True when the chords meet in the interior of the polygon.
bool chords_cross(const Chord& c, const Chord& d);

/// A convex n-gon with corners 1..n in counterclockwise order and a set of
/// pairwise noncrossing diagonals.
///
/// Corner i of tau(W) stands for the edge (i, i+1) of the diagram W.
class PolygonDissection {
 public:
  /// Throws DissectionError for n < 3, corners out of range, sides of the
  /// polygon given as diagonals, duplicates, or crossing diagonals.
  PolygonDissection(int n, std::vector<Chord> diagonals);

  int n() const { return n_; }
  int k() const { return static_cast<int>(diagonals_.size()); }
  /// Sorted lexicographically.
  const std::vector<Chord>& diagonals() const { return diagonals_; }
  bool has_diagonal(const Chord& c) const;
  bool is_triangulation() const { return k() == n_ - 3; }

  friend bool operator==(const PolygonDissection&,
                         const PolygonDissection&) = default;
  /// Orders by n, then by the sorted diagonal list.
  friend auto operator<=>(const PolygonDissection&,
                          const PolygonDissection&) = default;

 private:
  int n_;
  std::vector<Chord> diagonals_;
};

/// Whether (n, diagonals) would construct without throwing.
bool is_valid_dissection(int n, const std::vector<Chord>& diagonals);

/// Sides of the polygon: (1,2), (2,3), ..., (1,n).
bool is_polygon_side(int n, const Chord& c);

/// Requires a weakly admissible diagram; each propagator (i, j) becomes the
/// diagonal between corners i and j.
PolygonDissection tau(const WilsonLoopDiagram& d);
WilsonLoopDiagram tau_inverse(const PolygonDissection& p);

/// Internal faces, each as its corners in increasing (= counterclockwise)
/// order. There are k + 1 of them.
std::vector<std::vector<int>> internal_faces(const PolygonDissection& p);

/// The dual graph of the dissection with the outer face split into one leaf
/// per polygon side.
struct DualTree {
  struct Node {
    bool is_face;             // internal face, or an outer leaf
    std::vector<int> corners;  // face corners, or the two ends of the side
  };
  struct Edge {
    int u;
    int v;
    Chord crossed;  // the dissection edge this tree edge is dual to
  };

  std::vector<Node> nodes;  // faces first, then one leaf per side 1..n
  std::vector<Edge> edges;

  int degree(int node) const;
  bool is_tree() const;
};

DualTree dual_tree(const PolygonDissection& p);

struct TriangulatedPiece {
  VertexSet corners;
  std::vector<Chord> diagonals;    // sorted
  std::vector<Chord> sides;        // polygon sides in the piece, sorted
  bool trivial = false;            // a lone diagonal

  /// Maximal runs of cyclically consecutive corners; 0 if all n corners.
  int boundary_arcs(int n) const;
};

struct MaximalDecomposition {
  std::vector<TriangulatedPiece> pieces;  // ordered by corner set
  std::vector<Chord> loose_sides;         // sides in no piece
};

/// Cuts the dual tree at every non-triangle face; the remaining components
/// are the maximal triangulated pieces and the loose polygon sides.
MaximalDecomposition maximal_decomposition(const PolygonDissection& p);

/// Propagator sets of the maximal exact subdiagrams, in piece order. They
/// partition the propagators of d.
std::vector<PropagatorSet> exact_subdiagrams(const WilsonLoopDiagram& d);

/// The subgraph of tau(W) attached to (P, V(P)): corners whose diagram edge
/// has both endpoints in V(P), the diagonals of P, and the polygon sides
/// joining two of those corners.
struct PieceSubgraph {
  VertexSet corners;
  std::vector<Chord> diagonals;
  std::vector<Chord> sides;

  /// A triangulation of the convex polygon on `corners`: the hull cycle is
  /// present and there are exactly m - 3 further chords. A single diagonal
  /// counts as a trivial piece.
  bool is_triangulated_piece() const;
};

PieceSubgraph piece_subgraph(const WilsonLoopDiagram& d, PropagatorSet subset);

/// Same n and equal multisets of maximal-piece corner sets. Throws
/// DissectionError when the vertex counts differ.
bool equivalent(const WilsonLoopDiagram& d1, const WilsonLoopDiagram& d2);

/// Corner sets of the maximal pieces; equal keys mean equivalent diagrams.
std::vector<VertexSet> equivalence_key(const WilsonLoopDiagram& d);

/// Catalan number C_m.
mpz_class catalan(int m);

/// Product over maximal pieces of the triangulation count of the piece's
/// polygon, Cat(corners - 2).
mpz_class equivalence_class_size(const WilsonLoopDiagram& d);

/// Every diagram reachable by retriangulating the maximal pieces, sorted.
std::vector<WilsonLoopDiagram> equivalence_class(const WilsonLoopDiagram& d);

/// The lexicographically least member of the class.
WilsonLoopDiagram class_representative(const WilsonLoopDiagram& d);

/// Triangulations of the convex polygon with the given corners (in cyclic
/// order), as lists of interior diagonals. There are Cat(m - 2).
std::vector<std::vector<Chord>> polygon_triangulations(
    const std::vector<int>& corners);

/// Visits all dissections of the n-gon in lexicographic order of their
/// sorted diagonal lists, optionally only those with k diagonals.
void for_each_dissection(int n, std::optional<int> k,
                         const std::function<void(const PolygonDissection&)>& fn);
std::vector<PolygonDissection> enumerate_dissections(
    int n, std::optional<int> k = std::nullopt);

/// All weakly admissible diagrams on [n] (tau_inverse of the dissections),
/// in the same order.
std::vector<WilsonLoopDiagram> enumerate_weakly_admissible(
    int n, std::optional<int> k = std::nullopt);

}  // namespace wld
