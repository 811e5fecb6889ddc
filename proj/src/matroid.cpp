#include "wld/matroid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "wld/matching.hpp"

namespace wld {

namespace {

VertexSet expand(VertexSet ground, std::uint32_t compact) {
  VertexSet out;
  int pos = 0;
  for (int label : ground) {
    if ((compact >> pos) & 1U) out.insert(label);
    ++pos;
  }
  return out;
}

/// Calls fn on every subset of `ground` of size r.
template <typename Fn>
void for_each_subset_of_size(VertexSet ground, int r, Fn&& fn) {
  int m = ground.size();
  if (r < 0 || r > m) return;
  if (r == 0) {
    fn(VertexSet{});
    return;
  }
  std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t c = (std::uint64_t{1} << r) - 1; c < limit;) {
    fn(expand(ground, static_cast<std::uint32_t>(c)));
    // Gosper's hack: next integer with the same popcount.
    std::uint64_t low = c & (~c + 1);
    std::uint64_t ripple = c + low;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
}

std::vector<VertexSet> sorted_unique(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), LexLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

void check_ground_size(VertexSet ground) {
  if (ground.size() > kMaxExplicitGround) {
    throw MatroidError("explicit bases are limited to 16 ground elements");
  }
}

}  // namespace

Matroid::Matroid(VertexSet ground, std::vector<VertexSet> bases)
    : ground_(ground), bases_(sorted_unique(std::move(bases))) {
  check_ground_size(ground_);
  if (bases_.empty()) throw MatroidError("a matroid needs at least one basis");
  rank_ = bases_.front().size();
  for (VertexSet b : bases_) {
    if (!b.is_subset_of(ground_)) {
      throw MatroidError("basis leaves the ground set");
    }
    if (b.size() != rank_) throw MatroidError("bases differ in size");
  }

  const int m = ground_.size();
  const std::uint32_t full = (std::uint32_t{1} << m);
  std::vector<std::uint8_t> independent(full, 0);
  for (VertexSet b : bases_) independent[compress(b)] = 1;
  // Downward closure: walk from large masks to small ones.
  for (std::uint32_t mask = full; mask-- > 0;) {
    if (independent[mask]) continue;
    for (int e = 0; e < m; ++e) {
      std::uint32_t up = mask | (std::uint32_t{1} << e);
      if (up != mask && independent[up]) {
        independent[mask] = 1;
        break;
      }
    }
  }
  rank_table_.assign(full, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (independent[mask]) {
      rank_table_[mask] = static_cast<std::uint8_t>(std::popcount(mask));
      continue;
    }
    std::uint8_t best = 0;
    for (int e = 0; e < m; ++e) {
      std::uint32_t bit = std::uint32_t{1} << e;
      if (mask & bit) best = std::max(best, rank_table_[mask & ~bit]);
    }
    rank_table_[mask] = best;
  }
}

Matroid Matroid::uniform(VertexSet ground, int rank) {
  check_ground_size(ground);
  if (rank < 0 || rank > ground.size()) {
    throw MatroidError("uniform rank out of range");
  }
  std::vector<VertexSet> bases;
  for_each_subset_of_size(ground, rank,
                          [&](VertexSet s) { bases.push_back(s); });
  return {ground, std::move(bases)};
}

std::uint32_t Matroid::compress(VertexSet subset) const {
  std::uint32_t out = 0;
  int pos = 0;
  for (int label : ground_) {
    if (subset.contains(label)) out |= std::uint32_t{1} << pos;
    ++pos;
  }
  return out;
}

void Matroid::check_in_ground(VertexSet subset) const {
  if (!subset.is_subset_of(ground_)) {
    throw MatroidError("subset leaves the ground set");
  }
}

int Matroid::rank(VertexSet subset) const {
  check_in_ground(subset);
  return rank_table_[compress(subset)];
}

bool Matroid::is_independent(VertexSet subset) const {
  return rank(subset) == subset.size();
}

bool Matroid::is_basis(VertexSet subset) const {
  return subset.size() == rank_ && is_independent(subset);
}

bool hall_independent(const WilsonLoopDiagram& d, PropagatorSet subset,
                      VertexSet vertices) {
  if (vertices.size() > subset.size()) return false;
  std::vector<VertexSet> supports(static_cast<std::size_t>(d.k()));
  for (int idx : subset) supports[idx] = support(d, d.propagator(idx));
  BipartiteMatcher matcher(d.k());
  for (int v : vertices) {
    PropagatorSet adjacent;
    for (int idx : subset) {
      if (supports[idx].contains(v)) adjacent.insert(idx);
    }
    if (!matcher.add_left(adjacent)) return false;
  }
  return true;
}

namespace {

Matroid transversal_matroid(const WilsonLoopDiagram& d, PropagatorSet subset,
                            VertexSet ground) {
  check_ground_size(ground);
  // Rank of the whole ground set is the size of a maximum matching.
  BipartiteMatcher matcher(d.k());
  for (int v : ground) {
    PropagatorSet adjacent;
    for (int idx : subset) {
      if (support(d, d.propagator(idx)).contains(v)) adjacent.insert(idx);
    }
    matcher.add_left(adjacent);
  }
  std::vector<VertexSet> bases;
  for_each_subset_of_size(ground, matcher.matched(), [&](VertexSet s) {
    if (hall_independent(d, subset, s)) bases.push_back(s);
  });
  return {ground, std::move(bases)};
}

}  // namespace

Matroid matroid_of(const WilsonLoopDiagram& d, bool permissive) {
  if (!permissive && !is_weakly_admissible(d)) {
    throw MatroidError("diagram is not weakly admissible");
  }
  return transversal_matroid(d, d.all_propagators(), d.all_vertices());
}

Matroid matroid_of_subdiagram(const WilsonLoopDiagram& d, PropagatorSet subset,
                              bool permissive) {
  if (!permissive && !is_weakly_admissible(d, subset)) {
    throw MatroidError("subdiagram is not weakly admissible");
  }
  return transversal_matroid(d, subset, vertex_support(d, subset));
}

std::vector<VertexSet> circuits(const Matroid& m) {
  std::vector<VertexSet> out;
  for_each_subset(m.ground(), [&](VertexSet s) {
    if (s.empty() || m.is_independent(s)) return;
    for (int e : s) {
      if (!m.is_independent(s.without(e))) return;
    }
    out.push_back(s);
  });
  return sorted_unique(std::move(out));
}

bool is_flat(const Matroid& m, VertexSet subset) {
  int r = m.rank(subset);
  for (int e : m.ground() - subset) {
    if (m.rank(subset.with(e)) == r) return false;
  }
  return true;
}

std::vector<VertexSet> flats(const Matroid& m) {
  std::vector<VertexSet> out;
  for_each_subset(m.ground(), [&](VertexSet s) {
    if (is_flat(m, s)) out.push_back(s);
  });
  return sorted_unique(std::move(out));
}

namespace {

// A set is a union of circuits iff no element is a coloop of the restriction.
bool is_cycle(const Matroid& m, VertexSet subset) {
  int r = m.rank(subset);
  for (int e : subset) {
    if (m.rank(subset.without(e)) != r) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> cyclic_flats(const Matroid& m) {
  std::vector<VertexSet> out;
  for (VertexSet f : flats(m)) {
    if (is_cycle(m, f)) out.push_back(f);
  }
  return out;
}

VertexSet closure(const Matroid& m, VertexSet subset) {
  int r = m.rank(subset);
  VertexSet out = subset;
  for (int e : m.ground() - subset) {
    if (m.rank(subset.with(e)) == r) out.insert(e);
  }
  return out;
}

bool satisfies_basis_exchange(const Matroid& m) {
  std::unordered_set<VertexSet> lookup(m.bases().begin(), m.bases().end());
  for (VertexSet b1 : m.bases()) {
    for (VertexSet b2 : m.bases()) {
      for (int a : b1 - b2) {
        bool found = false;
        for (int b : b2 - b1) {
          if (lookup.count(b1.without(a).with(b))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

FlatDecomposition decompose_flat(const Matroid& m, VertexSet flat) {
  if (!flat.is_subset_of(m.ground()) || !is_flat(m, flat)) {
    throw MatroidError("set is not a flat");
  }
  // e lies on a circuit inside F iff removing it keeps the rank of F.
  VertexSet cyclic;
  int r = m.rank(flat);
  for (int e : flat) {
    if (m.rank(flat.without(e)) == r) cyclic.insert(e);
  }
  return {cyclic, flat - cyclic};
}

FlatDecomposition decompose_flat(const WilsonLoopDiagram& d, VertexSet flat) {
  return decompose_flat(matroid_of(d), flat);
}

Matroid contraction(const Matroid& m, VertexSet subset) {
  if (!subset.is_subset_of(m.ground())) {
    throw MatroidError("contraction set leaves the ground set");
  }
  int best = 0;
  for (VertexSet b : m.bases()) best = std::max(best, (b & subset).size());
  std::vector<VertexSet> bases;
  for (VertexSet b : m.bases()) {
    if ((b & subset).size() == best) bases.push_back(b - subset);
  }
  return {m.ground() - subset, std::move(bases)};
}

Matroid restriction(const Matroid& m, VertexSet subset) {
  if (!subset.is_subset_of(m.ground())) {
    throw MatroidError("restriction set leaves the ground set");
  }
  int best = m.rank(subset);
  std::vector<VertexSet> bases;
  for (VertexSet b : m.bases()) {
    if ((b & subset).size() == best) bases.push_back(b & subset);
  }
  return {subset, std::move(bases)};
}

Matroid dual(const Matroid& m) {
  std::vector<VertexSet> bases;
  bases.reserve(m.bases().size());
  for (VertexSet b : m.bases()) bases.push_back(m.ground() - b);
  return {m.ground(), std::move(bases)};
}

bool is_uniform(const Matroid& m) {
  // Bases are distinct r-subsets, so uniformity is a count.
  std::uint64_t total = 1;
  for (int i = 0; i < m.rank(); ++i) {
    total = total * static_cast<std::uint64_t>(m.ground_size() - i) /
            static_cast<std::uint64_t>(i + 1);
  }
  return m.bases().size() == total;
}

bool matroids_equal(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) {
    throw MatroidError("matroids have ground sets of different sizes");
  }
  return a == b;
}

}  // namespace wld
