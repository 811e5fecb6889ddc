#include "wld/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "wld/matching.hpp"

namespace wld {

Propagator::Propagator(int a, int b) : i_(std::min(a, b)), j_(std::max(a, b)) {
  if (a == b) {
    throw DiagramError("propagator endpoints must differ");
  }
}

WilsonLoopDiagram::WilsonLoopDiagram(int n, std::vector<Propagator> propagators)
    : n_(n), props_(std::move(propagators)) {
  if (n_ < 3) throw DiagramError("a diagram needs at least 3 vertices");
  if (n_ > kMaxSetSize) {
    throw DiagramError("diagrams are limited to 64 vertices");
  }
  std::sort(props_.begin(), props_.end());
  for (const auto& p : props_) {
    if (p.i() < 1 || p.j() > n_) {
      throw DiagramError("propagator (" + std::to_string(p.i()) + "," +
                         std::to_string(p.j()) + ") out of range 1.." +
                         std::to_string(n_));
    }
  }
  if (std::adjacent_find(props_.begin(), props_.end()) != props_.end()) {
    throw DiagramError("duplicate propagator");
  }
  if (k() > kMaxSetSize) {
    throw DiagramError("diagrams are limited to 64 propagators");
  }
}

int WilsonLoopDiagram::index_of(const Propagator& p) const {
  auto it = std::lower_bound(props_.begin(), props_.end(), p);
  if (it == props_.end() || *it != p) return -1;
  return static_cast<int>(it - props_.begin());
}

WilsonLoopDiagram WilsonLoopDiagram::restricted_to(PropagatorSet subset) const {
  std::vector<Propagator> kept;
  for (int idx : subset) kept.push_back(props_.at(idx));
  return {n_, std::move(kept)};
}

namespace {

void check_subset(const WilsonLoopDiagram& d, PropagatorSet subset) {
  if (!subset.is_subset_of(d.all_propagators())) {
    throw DiagramError("propagator set is not a subset of the diagram");
  }
}

}  // namespace

VertexSet support(const WilsonLoopDiagram& d, const Propagator& p) {
  if (p.i() < 1 || p.j() > d.n()) {
    throw DiagramError("propagator vertex out of range");
  }
  return {p.i(), d.next(p.i()), p.j(), d.next(p.j())};
}

VertexSet vertex_support(const WilsonLoopDiagram& d, PropagatorSet subset) {
  check_subset(d, subset);
  VertexSet out;
  for (int idx : subset) out |= support(d, d.propagator(idx));
  return out;
}

PropagatorSet props_on(const WilsonLoopDiagram& d, VertexSet vertices) {
  if (!vertices.is_subset_of(d.all_vertices())) {
    throw DiagramError("vertex set outside 1..n");
  }
  PropagatorSet out;
  for (int idx = 0; idx < d.k(); ++idx) {
    if (support(d, d.propagator(idx)).intersects(vertices)) out.insert(idx);
  }
  return out;
}

PropagatorSet complement(const WilsonLoopDiagram& d, PropagatorSet subset) {
  check_subset(d, subset);
  return subset.complement(d.k());
}

VertexSet propagator_flat(const WilsonLoopDiagram& d, PropagatorSet subset) {
  return vertex_support(d, complement(d, subset)).complement(d.n());
}

VertexSet non_supporting_vertices(const WilsonLoopDiagram& d) {
  return propagator_flat(d, PropagatorSet{});
}

bool crosses(const Propagator& p, const Propagator& q) {
  // With i < j stored, cyclic interleaving is the same as linear interleaving
  // in one of the two orders.
  return (p.i() < q.i() && q.i() < p.j() && p.j() < q.j()) ||
         (q.i() < p.i() && p.i() < q.j() && q.j() < p.j());
}

bool is_noncrossing(const WilsonLoopDiagram& d, PropagatorSet subset) {
  check_subset(d, subset);
  for (int a : subset) {
    for (int b : subset) {
      if (a < b && crosses(d.propagator(a), d.propagator(b))) return false;
    }
  }
  return true;
}

bool satisfies_density(const WilsonLoopDiagram& d, PropagatorSet subset) {
  check_subset(d, subset);
  // Hall with surplus 3: for every Q containing p, |V(Q)| >= |Q| + 3 holds
  // iff p can be matched four times and the rest once each.
  std::vector<int> members = subset.to_vector();
  for (int boosted : members) {
    BipartiteMatcher matcher(d.n());
    for (int idx : members) {
      VertexSet s = support(d, d.propagator(idx));
      int copies = idx == boosted ? 4 : 1;
      for (int c = 0; c < copies; ++c) {
        if (!matcher.add_left(s)) return false;
      }
    }
  }
  return true;
}

bool is_weakly_admissible(const WilsonLoopDiagram& d, PropagatorSet subset) {
  return is_noncrossing(d, subset) && satisfies_density(d, subset);
}

bool is_weakly_admissible(const WilsonLoopDiagram& d) {
  return is_weakly_admissible(d, d.all_propagators());
}

bool is_admissible(const WilsonLoopDiagram& d) {
  return d.n() >= d.k() + 4 && is_weakly_admissible(d);
}

bool is_exact(const WilsonLoopDiagram& d, PropagatorSet subset) {
  if (subset.empty()) {
    throw DiagramError("exactness is defined for nonempty propagator sets");
  }
  if (!is_weakly_admissible(d, subset)) {
    throw DiagramError("subdiagram is not weakly admissible");
  }
  return vertex_support(d, subset).size() == subset.size() + 3;
}

std::string CMatrixPattern::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < rows(); ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (c > 1) out << ' ';
      out << (nonzero(r, c) ? '*' : '0');
    }
    out << '\n';
  }
  return out.str();
}

CMatrixPattern c_matrix_pattern(const WilsonLoopDiagram& d) {
  std::vector<VertexSet> rows;
  rows.reserve(d.k());
  for (const auto& p : d.propagators()) rows.push_back(support(d, p));
  return {d.n(), std::move(rows)};
}

}  // namespace wld
