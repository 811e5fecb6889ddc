#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wld/dissection.hpp"
#include "wld/json_io.hpp"

using namespace wld;

TEST_CASE("dissection counts match the naive chord-set generator") {
  // Golden values: 3, 11, 45, 197 (n = 4..7), 903 at n = 8.
  const std::map<int, std::size_t> golden{{4, 3}, {5, 11}, {6, 45}, {7, 197},
                                          {8, 903}};
  for (auto [n, count] : golden) {
    CHECK(oracle::noncrossing_chord_sets(n).size() == count);
    CHECK(enumerate_dissections(n).size() == count);
    CHECK(enumerate_weakly_admissible(n).size() == count);
  }
}

TEST_CASE("diagram enumeration equals the naive propagator-set scan") {
  for (int n = 4; n <= 7; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      std::set<oracle::Pairs> expected;
      for (auto& ps : oracle::weakly_admissible_sets(n, k)) expected.insert(ps);
      std::set<oracle::Pairs> got;
      for (const auto& d : enumerate_weakly_admissible(n, k)) {
        got.insert(pairs_of(d));
      }
      INFO("n=" << n << " k=" << k);
      CHECK(got == expected);
    }
  }
  // n = 8, k = 3 as a count.
  CHECK(enumerate_weakly_admissible(8, 3).size() ==
        oracle::weakly_admissible_sets(8, 3).size());
}

TEST_CASE("triangulation counts are Catalan numbers") {
  for (int n = 3; n <= 10; ++n) {
    CHECK(enumerate_dissections(n, n - 3).size() ==
          static_cast<std::size_t>(oracle::catalan(n - 2)));
    CHECK(catalan(n - 2) == static_cast<long>(oracle::catalan(n - 2)));
  }
  std::vector<int> hexagon{1, 2, 3, 4, 5, 6};
  CHECK(polygon_triangulations(hexagon).size() == 14);
  CHECK(polygon_triangulations({2, 5, 7}).size() == 1);
}

TEST_CASE("tau and its inverse") {
  auto d = chain_w1();
  auto p = tau(d);
  CHECK(p.diagonals() == std::vector<Chord>{{1, 4}, {2, 4}, {5, 7}, {5, 8}});
  CHECK(tau_inverse(p) == d);
  CHECK_THROWS_AS(tau(make(8, {{1, 5}, {3, 7}})), DissectionError);
  CHECK_THROWS_AS(PolygonDissection(6, {{1, 2}}), DissectionError);
  CHECK_THROWS_AS(PolygonDissection(6, {{1, 4}, {2, 5}}), DissectionError);
}

TEST_CASE("dual tree shape") {
  auto p = tau(chain_w1());
  auto t = dual_tree(p);
  CHECK(t.nodes.size() == 8 + 4 + 1);
  CHECK(t.edges.size() == 8 + 4);
  CHECK(t.is_tree());
  CHECK(internal_faces(p).size() == 5);
}

TEST_CASE("maximal pieces of the chain example") {
  for (const auto& d : {chain_w1(), chain_w3()}) {
    auto key = equivalence_key(d);
    CHECK(as_lists(key) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6, 7, 8}});
    auto dec = maximal_decomposition(tau(d));
    for (const auto& piece : dec.pieces) {
      CHECK(piece.corners != VertexSet{1, 4, 5, 8});
    }
  }
}

TEST_CASE("chain equivalence") {
  CHECK(equivalent(chain_w1(), chain_w2()));
  CHECK(equivalent(chain_w2(), chain_w3()));
  CHECK(equivalent(chain_w1(), chain_w3()));
  CHECK(equivalent(chain_w1(), chain_w1()));
  // W1 and W3 differ on a non-exact union of exact pieces.
  auto w1 = chain_w1();
  PropagatorSet diff{w1.index_of(Propagator(2, 4)), w1.index_of(Propagator(5, 7)),
                     w1.index_of(Propagator(1, 4)), w1.index_of(Propagator(5, 8))};
  CHECK_FALSE(is_exact(w1, diff));
  CHECK_THROWS_AS(equivalent(chain_w1(), make(7, {})), DissectionError);
}

TEST_CASE("a bowtie of exact pieces is not a triangulated piece") {
  // (1,3) and (3,5) meet only at corner 3; their union is not exact.
  auto d = make(8, {{1, 3}, {3, 5}});
  PropagatorSet both{0, 1};
  CHECK_FALSE(is_exact(d, both));
  CHECK_FALSE(piece_subgraph(d, both).is_triangulated_piece());
  CHECK(piece_subgraph(d, {0}).is_triangulated_piece());
}

TEST_CASE("class sizes against a matroid-equality census") {
  // Independent of the piece machinery: count diagrams with equal matroid.
  for (int n = 4; n <= 7; ++n) {
    auto all = enumerate_weakly_admissible(n);
    std::map<std::vector<VertexSet>, std::size_t> census;
    for (const auto& d : all) ++census[matroid_of(d).bases()];
    for (const auto& d : all) {
      INFO(to_json(d).dump());
      CHECK(equivalence_class(d).size() == census[matroid_of(d).bases()]);
      CHECK(equivalence_class_size(d) == census[matroid_of(d).bases()]);
    }
  }
}

TEST_CASE("class of the chain example") {
  auto w1 = chain_w1();
  std::size_t census = 0;
  auto target = matroid_of(w1);
  for (const auto& d : enumerate_weakly_admissible(8, 4)) {
    if (matroid_of(d) == target) ++census;
  }
  // Two quadrilateral pieces, two triangulations each.
  CHECK(census == 4);
  CHECK(equivalence_class(w1).size() == 4);
  CHECK(equivalence_class_size(w1) == 4);
  auto cls = equivalence_class(w1);
  CHECK(std::binary_search(cls.begin(), cls.end(), chain_w2()));
  CHECK(std::binary_search(cls.begin(), cls.end(), chain_w3()));
  CHECK(class_representative(w1) == cls.front());
  CHECK(class_representative(w1) == make(8, {{1, 3}, {1, 4}, {5, 7}, {5, 8}}));
}

TEST_CASE("equivalence class counts") {
  auto classes = [](int n) {
    std::set<std::vector<VertexSet>> keys;
    for (const auto& d : enumerate_weakly_admissible(n)) {
      keys.insert(equivalence_key(d));
    }
    return keys.size();
  };
  CHECK(classes(4) == 2);
  CHECK(classes(5) == 7);
}

TEST_CASE("equivalence is an equivalence relation on [7]") {
  auto all = enumerate_weakly_admissible(7);
  std::vector<std::vector<VertexSet>> keys;
  for (const auto& d : all) keys.push_back(equivalence_key(d));
  for (std::size_t a = 0; a < all.size(); ++a) {
    REQUIRE(equivalent(all[a], all[a]));
    for (std::size_t b = 0; b < all.size(); ++b) {
      REQUIRE(equivalent(all[a], all[b]) == equivalent(all[b], all[a]));
      if (keys[a] != keys[b]) continue;
      for (std::size_t c = 0; c < all.size(); ++c) {
        if (keys[b] == keys[c]) REQUIRE(equivalent(all[a], all[c]));
      }
    }
  }
}
