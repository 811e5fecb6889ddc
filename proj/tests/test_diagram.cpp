#include "doctest.h"
#include "helpers.hpp"
#include "wld/json_io.hpp"

using namespace wld;

TEST_CASE("index sets") {
  VertexSet s{1, 3, 64};
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK(s.to_vector() == std::vector<int>{1, 3, 64});
  CHECK((s - VertexSet{3}) == VertexSet{1, 64});
  CHECK(VertexSet::range(4).complement(6) == VertexSet{5, 6});
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
  CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});
  CHECK(VertexSet{2} > VertexSet{1, 5});

  int subsets = 0;
  for_each_subset(VertexSet{2, 4, 6}, [&](VertexSet) { ++subsets; });
  CHECK(subsets == 8);
}

TEST_CASE("worked example: support and flats") {
  auto d = example_diagram();
  CHECK(non_supporting_vertices(d) == VertexSet{7});
  CHECK(propagator_flat(d, {}) == VertexSet{7});
  int p58 = d.index_of(Propagator(5, 8));
  REQUIRE(p58 >= 0);
  CHECK(support(d, Propagator(5, 8)) == VertexSet{1, 5, 6, 8});
  CHECK(propagator_flat(d, {p58}) == VertexSet{6, 7, 8});
  CHECK(is_admissible(d));

  PropagatorSet both{d.index_of(Propagator(1, 4)), d.index_of(Propagator(2, 4))};
  CHECK(vertex_support(d, both) == VertexSet{1, 2, 3, 4, 5});
  CHECK(is_exact(d, both));
  CHECK_FALSE(is_exact(d, d.all_propagators()));
}

TEST_CASE("worked example: the only non-trivial exact subdiagram") {
  auto d = example_diagram();
  std::vector<PropagatorSet> nontrivial;
  for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
    if (p.size() >= 2 && is_exact(d, p)) nontrivial.push_back(p);
  });
  REQUIRE(nontrivial.size() == 1);
  CHECK(vertex_support(d, nontrivial[0]) == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("C(W) sparsity pattern of the chain example") {
  auto d = chain_w1();
  auto pat = c_matrix_pattern(d);
  // Rows follow the sorted propagator order (1,4), (2,4), (5,7), (5,8).
  CHECK(pat.to_string() ==
        "* * 0 * * 0 0 0\n"
        "0 * * * * 0 0 0\n"
        "0 0 0 0 * * * *\n"
        "* 0 0 0 * * 0 *\n");
}

TEST_CASE("admissibility edge cases") {
  CHECK_FALSE(is_weakly_admissible(make(5, {{1, 2}})));   // adjacent edges
  CHECK(is_admissible(make(8, {})));
  CHECK(is_weakly_admissible(make(4, {{1, 3}})));
  CHECK_FALSE(is_admissible(make(4, {{1, 3}})));          // n < k + 4
  CHECK_FALSE(is_weakly_admissible(make(8, {{1, 5}, {3, 7}})));  // cross
  // Wrap-around crossing that a purely linear reading would miss is still
  // the same interleaving: (2,6) and (4,8).
  CHECK(crosses(Propagator(2, 6), Propagator(4, 8)));
  CHECK_FALSE(crosses(Propagator(1, 4), Propagator(4, 7)));  // shared end
  CHECK_FALSE(crosses(Propagator(1, 4), Propagator(5, 8)));
  // Edges n and 1 are adjacent too: V((1,8)) = {1,2,8} is too small.
  CHECK(support(make(8, {}), Propagator(1, 8)) == VertexSet{1, 2, 8});
  CHECK_FALSE(is_weakly_admissible(make(8, {{1, 8}})));
  CHECK(is_weakly_admissible(make(6, {{1, 3}, {1, 4}, {1, 5}})));
}

TEST_CASE("weak admissibility matches the naive scan on every set, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    oracle::Pairs all;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) all.push_back({a, b});
    }
    const std::uint32_t m = static_cast<std::uint32_t>(all.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      oracle::Pairs ps;
      for (std::uint32_t b = 0; b < m; ++b) {
        if (mask >> b & 1) ps.push_back(all[b]);
      }
      if (ps.size() > 6) continue;  // the scan is exponential in k
      auto d = make(n, ps);
      INFO("n=" << n << " mask=" << mask);
      REQUIRE(is_weakly_admissible(d) == oracle::weakly_admissible(n, ps));
    }
  }
}

TEST_CASE("exactness") {
  auto d = chain_w1();
  CHECK_THROWS_AS(is_exact(d, {}), DiagramError);
  CHECK_THROWS_AS(is_exact(make(5, {{1, 2}}), {0}), DiagramError);
  // Every single propagator is trivially exact.
  for (int i = 0; i < d.k(); ++i) CHECK(is_exact(d, {i}));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(make(2, {}), DiagramError);
  CHECK_THROWS_AS(make(5, {{0, 3}}), DiagramError);
  CHECK_THROWS_AS(make(5, {{1, 6}}), DiagramError);
  CHECK_THROWS_AS(make(5, {{2, 2}}), DiagramError);
  CHECK_THROWS_AS(make(6, {{1, 3}, {3, 1}}), DiagramError);
  CHECK_THROWS_AS(make(65, {}), DiagramError);
}

TEST_CASE("JSON round trip and parse errors") {
  auto d = parse_diagram(R"({"n":8,"propagators":[[4,1],[2,4],[5,8]]})");
  CHECK(d == example_diagram());
  CHECK(to_json(d).dump() == R"({"n":8,"propagators":[[1,4],[2,4],[5,8]]})");
  CHECK_THROWS_AS(parse_diagram("{"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"propagators":[]})"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"n":5,"propagators":[[1,3],[3,1]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"n":5,"propagators":[[1,3,4]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"n":5,"propagators":[[1,9]]})"),
                  DiagramError);
}
