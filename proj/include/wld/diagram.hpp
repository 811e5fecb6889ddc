#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wld/index_set.hpp"

namespace wld {

/// Raised for malformed diagrams and for operations whose preconditions on
/// a diagram do not hold.
class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An unordered pair of vertices, stored with i < j.
///
/// A propagator (i, j) sits on the boundary edges (i, i+1) and (j, j+1) of
/// the circle; the edge (v, v+1) is named by its first vertex v.
class Propagator {
 public:
  Propagator(int a, int b);

  int i() const { return i_; }
  int j() const { return j_; }

  friend auto operator<=>(const Propagator&, const Propagator&) = default;
  friend bool operator==(const Propagator&, const Propagator&) = default;

 private:
  int i_;
  int j_;
};

/// A Wilson loop diagram on the cyclically ordered vertices 1..n.
///
/// Propagators are kept sorted by (i, j); that order fixes the row order of
/// the C(W) pattern, the bit positions of PropagatorSet, and every output
/// listing.
class WilsonLoopDiagram {
 public:
  /// Throws DiagramError on n < 3, n > 64, out-of-range vertices or
  /// duplicate propagators.
  WilsonLoopDiagram(int n, std::vector<Propagator> propagators);

  int n() const { return n_; }
  int k() const { return static_cast<int>(props_.size()); }
  const std::vector<Propagator>& propagators() const { return props_; }
  const Propagator& propagator(int index) const { return props_.at(index); }

  /// Index of p in the canonical list, or -1.
  int index_of(const Propagator& p) const;

  PropagatorSet all_propagators() const { return PropagatorSet::range(k()); }
  VertexSet all_vertices() const { return VertexSet::range(n_); }

  /// Cyclic successor: n + 1 wraps to 1.
  int next(int v) const { return v == n_ ? 1 : v + 1; }

  /// The diagram keeping only the propagators in `subset` (same n).
  WilsonLoopDiagram restricted_to(PropagatorSet subset) const;

  friend bool operator==(const WilsonLoopDiagram&,
                         const WilsonLoopDiagram&) = default;
  /// Orders by n, then by the sorted propagator list.
  friend auto operator<=>(const WilsonLoopDiagram&,
                          const WilsonLoopDiagram&) = default;

 private:
  int n_;
  std::vector<Propagator> props_;
};

/// V(p) = {i, i+1, j, j+1} with indices taken cyclically.
VertexSet support(const WilsonLoopDiagram& d, const Propagator& p);

/// V(P), the union of the supports of the propagators in P.
VertexSet vertex_support(const WilsonLoopDiagram& d, PropagatorSet subset);

/// Prop(U), the propagators whose support meets U.
PropagatorSet props_on(const WilsonLoopDiagram& d, VertexSet vertices);

/// P^c relative to the diagram's propagators.
PropagatorSet complement(const WilsonLoopDiagram& d, PropagatorSet subset);

/// F(P) = [n] \ V(P^c): vertices supporting nothing outside P.
VertexSet propagator_flat(const WilsonLoopDiagram& d, PropagatorSet subset);

/// Vertices that support no propagator at all, i.e. F(empty set).
VertexSet non_supporting_vertices(const WilsonLoopDiagram& d);

/// True when the endpoint pairs interleave around the circle. Shared
/// endpoints never count as a crossing.
bool crosses(const Propagator& p, const Propagator& q);

/// Density condition: every nonempty Q inside `subset` has |V(Q)| >= |Q|+3.
/// Decided by Hall's theorem (each propagator in turn is given three extra
/// copies and must still be matched into distinct support vertices).
bool satisfies_density(const WilsonLoopDiagram& d, PropagatorSet subset);

/// No two propagators of `subset` cross.
bool is_noncrossing(const WilsonLoopDiagram& d, PropagatorSet subset);

/// Density and noncrossing for the subdiagram (P, V(P)).
bool is_weakly_admissible(const WilsonLoopDiagram& d, PropagatorSet subset);
bool is_weakly_admissible(const WilsonLoopDiagram& d);

/// Weakly admissible and n >= k + 4.
bool is_admissible(const WilsonLoopDiagram& d);

/// |V(P)| == |P| + 3. Throws DiagramError for empty P or when (P, V(P)) is
/// not weakly admissible.
bool is_exact(const WilsonLoopDiagram& d, PropagatorSet subset);

/// The k x n structural pattern of C(W): slot (row, col) is symbolic when
/// col is in the support of the row's propagator.
class CMatrixPattern {
 public:
  CMatrixPattern(int n, std::vector<VertexSet> rows)
      : n_(n), rows_(std::move(rows)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return n_; }
  /// 0-based row, 1-based column.
  bool nonzero(int row, int col) const { return rows_.at(row).contains(col); }
  VertexSet row_support(int row) const { return rows_.at(row); }

  std::string to_string() const;

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

CMatrixPattern c_matrix_pattern(const WilsonLoopDiagram& d);

}  // namespace wld
