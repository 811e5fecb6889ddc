#include "doctest.h"
#include "helpers.hpp"
#include "wld/dissection.hpp"
#include "wld/json_io.hpp"
#include "wld/realization.hpp"

using namespace wld;

TEST_CASE("bases agree with the naive Hall scan for every diagram, n <= 7") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& d : enumerate_weakly_admissible(n)) {
      auto m = matroid_of(d);
      INFO(to_json(d).dump());
      REQUIRE(as_lists(m.bases()) ==
              oracle::bases(n, pairs_of(d), oracle::range(n)));
    }
  }
}

TEST_CASE("worked example matroid") {
  auto m = matroid_of(example_diagram());
  CHECK(m.rank() == 3);
  CHECK(std::is_sorted(m.bases().begin(), m.bases().end(), LexLess{}));
  CHECK(m.rank(VertexSet{7}) == 0);  // the non-supporting vertex is a loop
  CHECK(as_lists(m.bases()) ==
        oracle::bases(8, pairs_of(example_diagram()), oracle::range(8)));

  auto dec = decompose_flat(m, VertexSet{7});
  CHECK(dec.cyclic_part == VertexSet{7});
  CHECK(dec.independent_part.empty());

  // The maximal exact subdiagram {(1,4),(2,4)} leaves F({(5,8)}) cyclic.
  VertexSet f = VertexSet{6, 7, 8};
  CHECK(is_flat(m, f));
  CHECK(decompose_flat(m, f).cyclic_part == f);
  auto cyc = cyclic_flats(m);
  CHECK(std::find(cyc.begin(), cyc.end(), f) != cyc.end());
}

TEST_CASE("empty diagram and exact subdiagram matroids") {
  auto empty = matroid_of(make(6, {}));
  CHECK(empty.rank() == 0);
  REQUIRE(empty.bases().size() == 1);
  CHECK(empty.bases()[0].empty());
  CHECK(to_json(empty).dump() == R"({"bases":[[]],"n":6,"rank":0})");

  auto d = example_diagram();
  PropagatorSet p{d.index_of(Propagator(1, 4)), d.index_of(Propagator(2, 4))};
  auto sub = matroid_of_subdiagram(d, p);
  CHECK(sub.ground() == VertexSet{1, 2, 3, 4, 5});
  CHECK(sub.bases().size() == 10);
  CHECK(is_uniform(sub));
  CHECK(sub == Matroid::uniform(VertexSet{1, 2, 3, 4, 5}, 2));
}

TEST_CASE("an independent flat has no cyclic part") {
  auto m = matroid_of(make(5, {{1, 3}, {1, 4}}));
  VertexSet f{1};
  REQUIRE(is_flat(m, f));
  REQUIRE(m.is_independent(f));
  CHECK(decompose_flat(m, f).cyclic_part.empty());
}

TEST_CASE("minors and duals on a uniform matroid") {
  auto u = Matroid::uniform(VertexSet{2, 3, 5, 7}, 2);
  CHECK(dual(u) == Matroid::uniform(VertexSet{2, 3, 5, 7}, 2));
  CHECK(contraction(u, VertexSet{2}) == Matroid::uniform(VertexSet{3, 5, 7}, 1));
  CHECK(restriction(u, VertexSet{3, 5, 7}) ==
        Matroid::uniform(VertexSet{3, 5, 7}, 2));
  CHECK(dual(dual(u)) == u);
  CHECK(closure(u, VertexSet{2, 3}) == VertexSet{2, 3, 5, 7});
  CHECK(circuits(u).size() == 4);
}

TEST_CASE("contraction by a loop-free flat, cross-checked by hand") {
  // M(W)/F(P^c) for the exact piece of the worked example.
  auto d = example_diagram();
  auto m = matroid_of(d);
  PropagatorSet p{d.index_of(Propagator(1, 4)), d.index_of(Propagator(2, 4))};
  VertexSet f = propagator_flat(d, complement(d, p));
  CHECK(f == VertexSet{6, 7, 8});
  CHECK(contraction(m, f) == Matroid::uniform(VertexSet{1, 2, 3, 4, 5}, 2));
}

TEST_CASE("matroid equality is label sensitive") {
  auto a = matroid_of(make(6, {{1, 3}}));
  auto b = matroid_of(make(6, {{2, 4}}));
  CHECK_FALSE(a == b);
  CHECK(matroids_equal(a, a));
  CHECK_THROWS_AS(matroids_equal(a, matroid_of(make(7, {{1, 3}}))),
                  MatroidError);
}

TEST_CASE("the chain example has one matroid") {
  auto m1 = matroid_of(chain_w1());
  CHECK(m1 == matroid_of(chain_w2()));
  CHECK(m1 == matroid_of(chain_w3()));
}

TEST_CASE("invalid bases are rejected") {
  CHECK_THROWS_AS(Matroid(VertexSet{1, 2, 3}, {}), MatroidError);
  CHECK_THROWS_AS(Matroid(VertexSet{1, 2, 3}, {VertexSet{1}, VertexSet{1, 2}}),
                  MatroidError);
  CHECK_THROWS_AS(Matroid(VertexSet{1, 2}, {VertexSet{3}}), MatroidError);
  CHECK_THROWS_AS(matroid_of(make(5, {{1, 2}})), MatroidError);
  // {12, 34} fails basis exchange; caught when reading untrusted input.
  CHECK_FALSE(satisfies_basis_exchange(
      Matroid(VertexSet{1, 2, 3, 4}, {VertexSet{1, 2}, VertexSet{3, 4}})));
  CHECK_THROWS_AS(
      matroid_from_json(Json::parse(R"({"n":4,"rank":2,"bases":[[1,2],[3,4]]})")),
      ParseError);
}

TEST_CASE("JSON matroid round trip") {
  auto m = matroid_of(chain_w1());
  CHECK(matroid_from_json(to_json(m)) == m);
  auto sub = Matroid::uniform(VertexSet{3, 4, 6}, 1);
  auto j = to_json(sub);
  CHECK(j.contains("ground"));
  CHECK(matroid_from_json(j) == sub);
}

TEST_CASE("realization oracle: 100 seeded samples over n <= 6") {
  std::vector<WilsonLoopDiagram> pool;
  for (int n = 3; n <= 6; ++n) {
    auto ds = enumerate_weakly_admissible(n);
    pool.insert(pool.end(), ds.begin(), ds.end());
  }
  REQUIRE(pool.size() == 60);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto& d = pool[s % pool.size()];
    INFO(to_json(d).dump() << " seed " << s);
    auto realized = realization_rank_oracle(d, s);
    CHECK(realized == matroid_of(d));
  }
}

TEST_CASE("a realization sample respects the sparsity pattern") {
  auto d = chain_w1();
  auto sample = sample_realization(d, 7);
  auto pat = c_matrix_pattern(d);
  for (int r = 0; r < pat.rows(); ++r) {
    for (int c = 1; c <= pat.cols(); ++c) {
      CHECK((sgn(sample.entries[r][c - 1]) != 0) == pat.nonzero(r, c));
    }
  }
  // Same seed, same sample.
  CHECK(sample_realization(d, 7).entries == sample.entries);
}
