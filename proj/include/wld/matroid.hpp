#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/index_set.hpp"

namespace wld {

class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bases are stored explicitly only up to this many ground elements.
inline constexpr int kMaxExplicitGround = 16;

/// A matroid given by its bases on a ground set of vertex labels.
///
/// Minors keep the labels of the matroid they came from: contracting [8]
/// by {6,7,8} gives a matroid on {1,...,5}, not on a fresh 1..5. The
/// order-preserving map onto 1..m is available through compact_labels()
/// when a caller wants it. Equality is label-aware.
///
/// A rank table over all 2^m subsets is built at construction so rank and
/// independence queries are lookups.
class Matroid {
 public:
  /// Throws MatroidError if the family is empty, a basis leaves the ground
  /// set, the bases differ in size, or the ground set exceeds 16 elements.
  Matroid(VertexSet ground, std::vector<VertexSet> bases);

  static Matroid uniform(VertexSet ground, int rank);

  VertexSet ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  int rank() const { return rank_; }
  /// Sorted lexicographically by element list, no duplicates.
  const std::vector<VertexSet>& bases() const { return bases_; }

  int rank(VertexSet subset) const;
  bool is_independent(VertexSet subset) const;
  bool is_basis(VertexSet subset) const;

  /// Sorted ground labels; position p (0-based) is relabeled to p + 1.
  std::vector<int> compact_labels() const { return ground_.to_vector(); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  std::uint32_t compress(VertexSet subset) const;
  void check_in_ground(VertexSet subset) const;

  VertexSet ground_;
  int rank_ = 0;
  std::vector<VertexSet> bases_;
  std::vector<std::uint8_t> rank_table_;
};

/// Hall test: can every vertex of `vertices` be matched to a distinct
/// propagator of `subset` whose support contains it?
bool hall_independent(const WilsonLoopDiagram& d, PropagatorSet subset,
                      VertexSet vertices);

/// M(W) on ground set [n]. Independence is Hall's condition on the
/// vertex/propagator incidence graph. Rejects diagrams that are not weakly
/// admissible unless `permissive` is set.
Matroid matroid_of(const WilsonLoopDiagram& d, bool permissive = false);

/// M((P, V(P))) on ground set V(P), with supports read in the ambient
/// diagram. Rejects P whose subdiagram is not weakly admissible unless
/// `permissive` is set.
Matroid matroid_of_subdiagram(const WilsonLoopDiagram& d, PropagatorSet subset,
                              bool permissive = false);

// Exhaustive structure, each list sorted lexicographically.
std::vector<VertexSet> circuits(const Matroid& m);
std::vector<VertexSet> flats(const Matroid& m);
std::vector<VertexSet> cyclic_flats(const Matroid& m);
VertexSet closure(const Matroid& m, VertexSet subset);
bool is_flat(const Matroid& m, VertexSet subset);

/// Exhaustive basis exchange check.
bool satisfies_basis_exchange(const Matroid& m);

struct FlatDecomposition {
  VertexSet cyclic_part;       // union of the circuits inside the flat
  VertexSet independent_part;  // the rest of the flat
};

/// Splits a flat F of M(W) into its cyclic part and an independent rest.
/// Throws MatroidError if F is not a flat.
FlatDecomposition decompose_flat(const Matroid& m, VertexSet flat);
FlatDecomposition decompose_flat(const WilsonLoopDiagram& d, VertexSet flat);

/// M / S: bases B \ S over the bases maximising |B intersect S|.
Matroid contraction(const Matroid& m, VertexSet subset);
/// M | S: the maximal intersections B intersect S.
Matroid restriction(const Matroid& m, VertexSet subset);
Matroid dual(const Matroid& m);

bool is_uniform(const Matroid& m);

/// Label-aware base-family equality. Throws MatroidError when the ground
/// sets have different sizes.
bool matroids_equal(const Matroid& a, const Matroid& b);

}  // namespace wld
