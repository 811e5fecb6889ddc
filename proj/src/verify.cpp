#include "wld/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wld/associahedron.hpp"
#include "wld/realization.hpp"

namespace wld {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void count(std::size_t cases = 1) { result_.cases += cases; }

  /// Records a failure; only the first counterexample is kept.
  void fail(Json witness) {
    if (result_.passed) result_.counterexample = std::move(witness);
    result_.passed = false;
  }

  void expect(bool ok, const std::function<Json()>& witness) {
    count();
    if (!ok) fail(witness());
  }

  Json& details() { return result_.details; }
  CheckResult finish() { return std::move(result_); }
  bool failed() const { return !result_.passed; }

 private:
  CheckResult result_;
};

Json witness(const WilsonLoopDiagram& d, const std::string& what) {
  return {{"diagram", to_json(d)}, {"violation", what}};
}

Json witness(const WilsonLoopDiagram& d, PropagatorSet subset,
             const std::string& what) {
  Json props = Json::array();
  for (int idx : subset) {
    props.push_back({d.propagator(idx).i(), d.propagator(idx).j()});
  }
  return {{"diagram", to_json(d)}, {"subset", props}, {"violation", what}};
}

Json witness(const PolygonDissection& p, const std::string& what) {
  return {{"dissection", to_json(p)}, {"violation", what}};
}

Json witness_pair(const WilsonLoopDiagram& a, const WilsonLoopDiagram& b,
                  const std::string& what) {
  return {{"first", to_json(a)}, {"second", to_json(b)}, {"violation", what}};
}

bool density_by_subset_scan(const WilsonLoopDiagram& d, PropagatorSet subset) {
  bool ok = true;
  for_each_subset(subset, [&](PropagatorSet q) {
    if (!q.empty() && vertex_support(d, q).size() < q.size() + 3) ok = false;
  });
  return ok;
}

bool hall_by_subset_scan(const WilsonLoopDiagram& d, VertexSet vertices) {
  bool ok = true;
  for_each_subset(vertices, [&](VertexSet u) {
    if (props_on(d, u).size() < u.size()) ok = false;
  });
  return ok;
}

/// Bases of the direct sum of the pieces' matroids.
std::vector<VertexSet> direct_sum_bases(const std::vector<Matroid>& parts) {
  std::vector<VertexSet> acc{VertexSet{}};
  for (const auto& m : parts) {
    std::vector<VertexSet> next;
    for (VertexSet a : acc) {
      for (VertexSet b : m.bases()) next.push_back(a | b);
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), LexLess{});
  return acc;
}

/// Groups of propagators linked through shared support vertices.
std::vector<PropagatorSet> support_components(const WilsonLoopDiagram& d) {
  std::vector<int> parent(static_cast<std::size_t>(d.k()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int a = 0; a < d.k(); ++a) {
    for (int b = a + 1; b < d.k(); ++b) {
      if (support(d, d.propagator(a)).intersects(support(d, d.propagator(b)))) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::map<int, PropagatorSet> groups;
  for (int a = 0; a < d.k(); ++a) groups[find(a)].insert(a);
  std::vector<PropagatorSet> out;
  for (auto& [root, set] : groups) out.push_back(set);
  return out;
}

WilsonLoopDiagram rotate(const WilsonLoopDiagram& d, int shift) {
  std::vector<Propagator> props;
  for (const auto& p : d.propagators()) {
    auto move = [&](int v) { return (v - 1 + shift) % d.n() + 1; };
    props.emplace_back(move(p.i()), move(p.j()));
  }
  return {d.n(), std::move(props)};
}

VertexSet rotate(VertexSet s, int n, int shift) {
  VertexSet out;
  for (int v : s) out.insert((v - 1 + shift) % n + 1);
  return out;
}

/// Does the single-step relation hold: exact P in a, exact P' in b with
/// equal supports and identical remainders?
bool directly_related(const WilsonLoopDiagram& a, const WilsonLoopDiagram& b) {
  if (a.k() != b.k()) return false;
  PropagatorSet only_a;
  PropagatorSet common_a;
  for (int idx = 0; idx < a.k(); ++idx) {
    (b.index_of(a.propagator(idx)) >= 0 ? common_a : only_a).insert(idx);
  }
  PropagatorSet only_b;
  for (int idx = 0; idx < b.k(); ++idx) {
    if (a.index_of(b.propagator(idx)) < 0) only_b.insert(idx);
  }
  if (only_a.empty()) return true;  // identical diagrams
  bool related = false;
  for_each_subset(common_a, [&](PropagatorSet extra) {
    if (related) return;
    PropagatorSet pa = only_a | extra;
    PropagatorSet pb = only_b;
    for (int idx : extra) pb.insert(b.index_of(a.propagator(idx)));
    VertexSet va = vertex_support(a, pa);
    if (va.size() == pa.size() + 3 && va == vertex_support(b, pb)) {
      related = true;
    }
  });
  return related;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}};
    if (!c.details.empty()) entry["details"] = c.details;
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    list.push_back(std::move(entry));
  }
  return {{"n", n}, {"level", level}, {"passed", passed()}, {"checks", list}};
}

int max_n_for_level(int level) {
  switch (level) {
    case 1:
    case 2:
      return 9;
    case 3:
      return 8;
    default:
      throw std::invalid_argument("verification level must be 1, 2 or 3");
  }
}

CheckResult check_flat_identities(int n) {
  Recorder rec("flat_identities");
  for (const auto& d : enumerate_weakly_admissible(n)) {
    rec.expect(!is_admissible(d) || is_weakly_admissible(d),
               [&] { return witness(d, "admissible but not weakly"); });
    VertexSet loose = non_supporting_vertices(d);
    for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
      VertexSet flat = propagator_flat(d, p);
      VertexSet own = vertex_support(d, p);
      VertexSet other = vertex_support(d, complement(d, p));
      rec.expect(flat == ((own - other) | loose), [&] {
        return witness(d, p, "F(P) differs from (V(P) minus V(P^c)) + F(0)");
      });
      rec.expect(props_on(d, flat).is_subset_of(p),
                 [&] { return witness(d, p, "Prop(F(P)) not inside P"); });
      for (int extra : complement(d, p)) {
        PropagatorSet q = p.with(extra);
        rec.expect(own.is_subset_of(vertex_support(d, q)) &&
                       flat.is_subset_of(propagator_flat(d, q)),
                   [&] { return witness(d, p, "support or flat not monotone"); });
      }
    });
  }
  return rec.finish();
}

CheckResult check_density_against_subset_scan(int n) {
  Recorder rec("density_and_dissection_agreement");
  std::vector<Propagator> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  const int max_k = n <= 6 ? static_cast<int>(pairs.size()) : 4;
  const int scan_k = n <= 6 ? 6 : 4;
  rec.details()["max_propagators"] = max_k;
  std::vector<Propagator> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    WilsonLoopDiagram d(n, chosen);
    bool weak = is_weakly_admissible(d);
    std::vector<Chord> chords;
    for (const auto& p : chosen) chords.push_back({p.i(), p.j()});
    rec.expect(weak == is_valid_dissection(n, chords), [&] {
      return witness(d, "weak admissibility disagrees with dissection validity");
    });
    if (d.k() <= scan_k) {
      rec.expect(satisfies_density(d, d.all_propagators()) ==
                     density_by_subset_scan(d, d.all_propagators()),
                 [&] { return witness(d, "Hall density disagrees with scan"); });
    }
    if (static_cast<int>(chosen.size()) == max_k) return;
    for (std::size_t c = from; c < pairs.size(); ++c) {
      chosen.push_back(pairs[c]);
      grow(c + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return rec.finish();
}

CheckResult check_matroid_invariants(int n) {
  Recorder rec("matroid_invariants");
  const bool scan_hall = n <= 7;
  rec.details()["hall_subset_scan"] = scan_hall;
  for (const auto& d : enumerate_weakly_admissible(n)) {
    Matroid m = matroid_of(d);
    rec.expect(m.rank() == d.k(), [&] { return witness(d, "rank differs from k"); });
    rec.expect(satisfies_basis_exchange(m),
               [&] { return witness(d, "basis exchange fails"); });

    for_each_subset(d.all_vertices(), [&](VertexSet v) {
      int r = m.rank(v);
      rec.expect(r <= std::min(v.size(), props_on(d, v).size()), [&] {
        return witness(d, "rank exceeds min(|V|, |Prop(V)|)");
      });
      if (scan_hall) {
        rec.expect(m.is_independent(v) == hall_by_subset_scan(d, v), [&] {
          return witness(d, "matching independence disagrees with Hall scan");
        });
      }
    });

    for (VertexSet c : circuits(m)) {
      rec.expect(m.rank(c) == props_on(d, c).size(),
                 [&] { return witness(d, "circuit rank differs from |Prop(C)|"); });
    }
    for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
      rec.expect(is_flat(m, propagator_flat(d, p)),
                 [&] { return witness(d, p, "propagator flat is not a flat"); });
    });
    for (VertexSet c : cyclic_flats(m)) {
      rec.expect(c == propagator_flat(d, props_on(d, c)), [&] {
        return witness(d, "cyclic flat is not a propagator flat");
      });
    }
    const bool loopless = non_supporting_vertices(d).empty();
    for (VertexSet f : flats(m)) {
      FlatDecomposition parts = decompose_flat(m, f);
      rec.expect(parts.cyclic_part ==
                     propagator_flat(d, props_on(d, parts.cyclic_part)),
                 [&] { return witness(d, "cyclic part is not a propagator flat"); });
      rec.expect(m.is_independent(parts.independent_part),
                 [&] { return witness(d, "independent part is dependent"); });
      if (loopless) {
        rec.expect(is_flat(m, parts.independent_part), [&] {
          return witness(d, "independent part of a flat is not a flat");
        });
      }
    }

    if (is_admissible(d)) {
      auto maximal = exact_subdiagrams(d);
      for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
        if (p.empty() || !is_exact(d, p)) return;
        VertexSet f = propagator_flat(d, complement(d, p));
        rec.expect(m.rank(f) == complement(d, p).size(), [&] {
          return witness(d, p, "rank of F(P^c) differs from |P^c|");
        });
        rec.expect(!m.is_independent(f),
                   [&] { return witness(d, p, "F(P^c) is independent"); });
        if (std::find(maximal.begin(), maximal.end(), p) != maximal.end()) {
          auto cyc = cyclic_flats(m);
          rec.expect(std::find(cyc.begin(), cyc.end(), f) != cyc.end(), [&] {
            return witness(d, p, "F(P^c) of a maximal exact P is not cyclic");
          });
        }
      });
    }

    auto groups = support_components(d);
    if (groups.size() > 1) {
      std::vector<Matroid> parts;
      for (PropagatorSet g : groups) parts.push_back(matroid_of_subdiagram(d, g));
      rec.expect(direct_sum_bases(parts) == m.bases(), [&] {
        return witness(d, "matroid is not the direct sum of its pieces");
      });
    }
  }
  return rec.finish();
}

CheckResult check_dissection_structure(int n) {
  Recorder rec("dissection_structure");
  for (const auto& p : enumerate_dissections(n)) {
    WilsonLoopDiagram d = tau_inverse(p);
    rec.expect(tau(d) == p && tau_inverse(tau(d)) == d,
               [&] { return witness(p, "tau round trip fails"); });

    DualTree tree = dual_tree(p);
    bool shape = static_cast<int>(tree.nodes.size()) == n + p.k() + 1 &&
                 static_cast<int>(tree.edges.size()) == n + p.k() &&
                 tree.is_tree();
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
      if (tree.degree(static_cast<int>(v)) == 2) shape = false;
    }
    rec.expect(shape, [&] { return witness(p, "dual tree has the wrong shape"); });

    MaximalDecomposition dec = maximal_decomposition(p);
    std::multiset<Chord> seen;
    for (const auto& piece : dec.pieces) {
      seen.insert(piece.diagonals.begin(), piece.diagonals.end());
      int expected = piece.corners.size() - 3 + piece.boundary_arcs(n);
      rec.expect(static_cast<int>(piece.diagonals.size()) == expected, [&] {
        return witness(p, "piece diagonal count differs from m - 3 + j");
      });
    }
    rec.expect(std::vector<Chord>(seen.begin(), seen.end()) == p.diagonals(), [&] {
      return witness(p, "pieces do not partition the diagonals");
    });

    // Brute force: maximal exact subdiagrams by containment.
    std::vector<PropagatorSet> exact;
    for_each_subset(d.all_propagators(), [&](PropagatorSet s) {
      if (!s.empty() && is_exact(d, s)) exact.push_back(s);
      if (!s.empty()) {
        rec.expect(is_exact(d, s) == piece_subgraph(d, s).is_triangulated_piece(),
                   [&] {
                     return witness(d, s,
                                    "exactness disagrees with piece subgraph");
                   });
      }
    });
    std::vector<PropagatorSet> maximal;
    for (PropagatorSet s : exact) {
      bool dominated = std::any_of(exact.begin(), exact.end(), [&](PropagatorSet t) {
        return t != s && s.is_subset_of(t);
      });
      if (!dominated) maximal.push_back(s);
    }
    auto from_tree = exact_subdiagrams(d);
    auto sorted = [](std::vector<PropagatorSet> v) {
      std::sort(v.begin(), v.end(), LexLess{});
      return v;
    };
    rec.expect(sorted(maximal) == sorted(from_tree), [&] {
      return witness(p, "dual-tree pieces differ from maximal exact subdiagrams");
    });
    for (std::size_t i = 0; i < from_tree.size() && i < dec.pieces.size(); ++i) {
      rec.expect(piece_subgraph(d, from_tree[i]).corners == dec.pieces[i].corners,
                 [&] { return witness(p, "piece subgraph corners differ"); });
    }

    WilsonLoopDiagram turned = rotate(d, 1);
    std::vector<VertexSet> back;
    for (VertexSet s : equivalence_key(turned)) back.push_back(rotate(s, n, n - 1));
    std::sort(back.begin(), back.end(), LexLess{});
    rec.expect(back == equivalence_key(d), [&] {
      return witness(p, "decomposition changes under cyclic relabeling");
    });
  }
  return rec.finish();
}

CheckResult check_face_geometry(int n) {
  Recorder rec("face_geometry");
  PolygonRealization poly = default_polygon(n);
  const Rational triple_area = 3 * poly.polygon_area();
  for (const auto& p : enumerate_dissections(n)) {
    std::optional<SecondaryFace> found;
    try {
      found = face_of(poly, p);
    } catch (const std::logic_error& e) {
      rec.expect(false, [&] { return witness(p, e.what()); });
      continue;
    }
    const SecondaryFace& face = *found;
    rec.expect(face.dimension() == n - 3 - p.k(),
               [&] { return witness(p, "face dimension differs from n - 3 - k"); });
    mpz_class expected_vertices = 1;
    for (const auto& f : internal_faces(p)) {
      expected_vertices *= catalan(static_cast<int>(f.size()) - 2);
    }
    rec.expect(expected_vertices == face.vertices.size(), [&] {
      return witness(p, "vertex count differs from the Catalan product");
    });
    for (const auto& v : face.vertices) {
      Rational total = std::accumulate(v.begin(), v.end(), Rational(0));
      rec.expect(total == triple_area, [&] {
        return witness(p, "coordinates do not sum to three times the area");
      });
    }
    for (const auto& q : face.bounding_quads) {
      RationalVector dir = edge_direction(poly, q[0], q[1], q[2], q[3]);
      int nonzero = 0;
      for (int c = 1; c <= n; ++c) {
        bool in_quad = std::find(q.begin(), q.end(), c) != q.end();
        if (sgn(dir[c - 1]) != 0) {
          ++nonzero;
          if (!in_quad) nonzero = -100;
        }
      }
      rec.expect(nonzero == 4, [&] {
        return witness(p, "edge direction not supported on its quadrilateral");
      });
    }
    for (const auto& c : p.diagonals()) {
      for (ChordSide side : {ChordSide::kBetween, ChordSide::kBeyond}) {
        RationalVector w;
        try {
          w = omega_plus(poly, c, side);
        } catch (const std::logic_error& e) {
          rec.expect(false, [&] { return witness(p, e.what()); });
          continue;
        }
        for (const auto& q : face.bounding_quads) {
          rec.expect(sgn(dot(w, edge_direction(poly, q[0], q[1], q[2], q[3]))) == 0,
                     [&] { return witness(p, "omega_plus not normal to the face"); });
        }
      }
    }
  }
  return rec.finish();
}

CheckResult check_contraction_identity(int n) {
  Recorder rec("contraction_identity");
  std::size_t admissible_cases = 0;
  for (const auto& d : enumerate_weakly_admissible(n)) {
    Matroid m = matroid_of(d);
    for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
      if (p.empty() || !is_exact(d, p)) return;
      if (is_admissible(d)) ++admissible_cases;
      VertexSet f = propagator_flat(d, complement(d, p));
      rec.expect(contraction(m, f) == matroid_of_subdiagram(d, p), [&] {
        return witness(d, p, "M(W)/F(P^c) differs from M((P, V(P)))");
      });
      rec.expect(restriction(dual(m), vertex_support(d, p)) ==
                     dual(matroid_of_subdiagram(d, p)),
                 [&] { return witness(d, p, "dual restriction form fails"); });
    });
  }
  rec.details()["admissible_cases"] = admissible_cases;
  return rec.finish();
}

CheckResult check_exact_iff_uniform(int n) {
  Recorder rec("exact_iff_uniform");
  for (const auto& d : enumerate_weakly_admissible(n)) {
    for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
      if (p.empty() || !is_weakly_admissible(d, p)) return;
      Matroid sub = matroid_of_subdiagram(d, p);
      bool uniform_full = is_uniform(sub) && sub.rank() == p.size();
      rec.expect(is_exact(d, p) == uniform_full, [&] {
        return witness(d, p, "exactness and uniformity disagree");
      });
    });
  }
  return rec.finish();
}

CheckResult check_matroid_iff_equivalent(int n, std::optional<int> max_k) {
  Recorder rec("matroid_iff_equivalent");
  std::vector<WilsonLoopDiagram> diagrams;
  for (const auto& d : enumerate_weakly_admissible(n)) {
    if (!max_k || d.k() <= *max_k) diagrams.push_back(d);
  }
  std::map<std::vector<VertexSet>, std::size_t> by_matroid;
  std::map<std::vector<VertexSet>, std::size_t> by_key;
  std::vector<std::vector<VertexSet>> bases(diagrams.size());
  std::vector<std::vector<VertexSet>> keys(diagrams.size());
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    bases[i] = matroid_of(diagrams[i]).bases();
    keys[i] = equivalence_key(diagrams[i]);
    by_matroid.try_emplace(bases[i], i);
    by_key.try_emplace(keys[i], i);
  }
  // Equal partitions: the first diagram with a given matroid must also be
  // the first with the given key, and vice versa.
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    std::size_t a = by_matroid.at(bases[i]);
    std::size_t b = by_key.at(keys[i]);
    rec.expect(a == b, [&] {
      std::size_t other = a != i ? a : b;
      return witness_pair(diagrams[other], diagrams[i],
                          a != i ? "same matroid but not equivalent"
                                 : "equivalent but different matroids");
    });
  }
  rec.details()["diagrams"] = diagrams.size();
  rec.details()["pairs"] = diagrams.size() * diagrams.size();
  rec.details()["classes"] = by_key.size();
  return rec.finish();
}

CheckResult check_class_sizes(int n) {
  Recorder rec("class_sizes");
  std::set<std::vector<VertexSet>> done;
  std::size_t covered = 0;
  auto all = enumerate_weakly_admissible(n);
  for (const auto& d : all) {
    auto cls = equivalence_class(d);
    rec.expect(cls.size() == equivalence_class_size(d),
               [&] { return witness(d, "class size differs from Catalan product"); });
    rec.expect(std::binary_search(cls.begin(), cls.end(), d),
               [&] { return witness(d, "class does not contain the diagram"); });
    bool members_ok = std::all_of(cls.begin(), cls.end(), [&](const auto& e) {
      return is_weakly_admissible(e) && equivalent(e, d);
    });
    rec.expect(members_ok,
               [&] { return witness(d, "class member is not equivalent"); });
    if (done.insert(equivalence_key(d)).second) covered += cls.size();
  }
  rec.expect(covered == all.size(), [&] {
    return Json{{"violation", "classes do not cover all diagrams"},
                {"covered", covered},
                {"total", all.size()}};
  });
  return rec.finish();
}

CheckResult check_retriangulation_closure(int n) {
  Recorder rec("retriangulation_closure");
  auto all = enumerate_weakly_admissible(n);
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (directly_related(all[i], all[j])) parent[find(i)] = find(j);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool closure = find(i) == find(j);
      rec.expect(closure == equivalent(all[i], all[j]), [&] {
        return witness_pair(all[i], all[j],
                            "transitive closure disagrees with piece sets");
      });
    }
  }
  return rec.finish();
}

CheckResult check_parallel_iff_equivalent(int n) {
  Recorder rec("parallel_iff_equivalent");
  PolygonRealization poly = default_polygon(n);
  auto all = enumerate_dissections(n);
  std::vector<std::vector<RationalVector>> sigs;
  std::vector<std::vector<VertexSet>> keys;
  for (const auto& p : all) {
    sigs.push_back(translation_signature(face_of(poly, p)));
    keys.push_back(equivalence_key(tau_inverse(p)));
  }
  const bool direct = n <= 6;
  rec.details()["pairwise_faces_parallel"] = direct;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      bool parallel = sigs[i] == sigs[j];
      if (direct) {
        rec.expect(parallel == faces_parallel(poly, all[i], all[j]), [&] {
          return witness_pair(tau_inverse(all[i]), tau_inverse(all[j]),
                              "faces_parallel disagrees with signatures");
        });
      }
      bool equiv = keys[i] == keys[j];
      rec.expect(parallel == equiv, [&] {
        return witness_pair(tau_inverse(all[i]), tau_inverse(all[j]),
                            equiv ? "equivalent but faces not parallel"
                                  : "inequivalent but faces parallel");
      });
    }
  }
  return rec.finish();
}

CheckResult check_nonparallel_count(int n) {
  Recorder rec("nonparallel_count");
  std::set<std::vector<VertexSet>> classes;
  for (const auto& d : enumerate_weakly_admissible(n)) {
    classes.insert(equivalence_key(d));
  }
  std::size_t parallel = count_nonparallel_faces(n);
  rec.details()["equivalence_classes"] = classes.size();
  rec.details()["parallel_classes"] = parallel;
  rec.expect(parallel == classes.size(), [&] {
    return Json{{"violation", "class counts differ"},
                {"equivalence_classes", classes.size()},
                {"parallel_classes", parallel}};
  });
  return rec.finish();
}

CheckResult check_realizations(int n, std::uint64_t seed) {
  Recorder rec("realization_oracle");
  std::uint64_t s = seed;
  for (const auto& d : enumerate_weakly_admissible(n)) {
    std::string error;
    try {
      realization_rank_oracle(d, s++);
    } catch (const RealizationError& e) {
      error = e.what();
    }
    rec.expect(error.empty(), [&] { return witness(d, error); });
  }
  rec.details()["seed"] = seed;
  return rec.finish();
}

VerifyReport verify(int n, int level, std::uint64_t seed) {
  int bound = max_n_for_level(level);
  if (n < 4 || n > bound) {
    throw std::invalid_argument("n must lie in 4.." + std::to_string(bound) +
                                " for level " + std::to_string(level));
  }
  VerifyReport report;
  report.n = n;
  report.level = level;
  auto& c = report.checks;
  c.push_back(check_flat_identities(n));
  c.push_back(check_density_against_subset_scan(n));
  c.push_back(check_matroid_invariants(n));
  c.push_back(check_dissection_structure(n));
  c.push_back(check_face_geometry(n));
  if (level >= 2) {
    c.push_back(check_contraction_identity(n));
    c.push_back(check_exact_iff_uniform(n));
    c.push_back(check_matroid_iff_equivalent(n));
    c.push_back(check_class_sizes(n));
    c.push_back(check_retriangulation_closure(n));
    c.push_back(check_parallel_iff_equivalent(n));
    c.push_back(check_nonparallel_count(n));
  }
  if (level >= 3) c.push_back(check_realizations(n, seed));
  return report;
}

}  // namespace wld
