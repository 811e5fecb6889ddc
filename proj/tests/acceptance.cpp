// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "wld/associahedron.hpp"
#include "wld/dissection.hpp"
#include "wld/realization.hpp"
#include "wld/verify.hpp"

using namespace wld;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "first failure: " << what << "; ";
    }
  }
  void absorb(const CheckResult& c, int n) {
    require(c.passed, c.name + " at n=" + std::to_string(n) + " " +
                          c.counterexample.value_or(Json()).dump());
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (!out.ok) ++failures;
  std::printf("%s  %-44s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", name.c_str(),
              secs, out.detail.str().c_str());
  std::fflush(stdout);
}

double timed_cli(const std::string& args, int& code) {
  auto start = std::chrono::steady_clock::now();
  std::string cmd = std::string(WLD_BINARY) + " " + args + " > /dev/null";
  code = WEXITSTATUS(std::system(cmd.c_str()));
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::size_t key_classes(int n) {
  std::set<std::vector<VertexSet>> keys;
  for (const auto& d : enumerate_weakly_admissible(n)) keys.insert(equivalence_key(d));
  return keys.size();
}

}  // namespace

int main() {
  criterion("worked examples", [](Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    auto d = example_diagram();
    o.require(propagator_flat(d, {}) == VertexSet{7}, "F(empty) = {7}");
    int p58 = d.index_of(Propagator(5, 8));
    o.require(propagator_flat(d, {p58}) == VertexSet{6, 7, 8}, "F((5,8))");
    o.require(support(d, Propagator(5, 8)) == VertexSet{5, 6, 8, 1}, "V((5,8))");
    std::vector<VertexSet> nontrivial;
    for_each_subset(d.all_propagators(), [&](PropagatorSet p) {
      if (p.size() >= 2 && is_exact(d, p)) nontrivial.push_back(vertex_support(d, p));
    });
    o.require(nontrivial == std::vector<VertexSet>{VertexSet{1, 2, 3, 4, 5}},
              "unique non-trivial exact subdiagram");
    o.require(equivalent(chain_w1(), chain_w2()) &&
                  equivalent(chain_w2(), chain_w3()) &&
                  equivalent(chain_w1(), chain_w3()),
              "W1 ~ W2 ~ W3");
    auto m1 = matroid_of(chain_w1());
    o.require(m1 == matroid_of(chain_w2()) && m1 == matroid_of(chain_w3()),
              "M(W1) = M(W2) = M(W3)");
    o.require(c_matrix_pattern(chain_w1()).to_string() ==
                  "* * 0 * * 0 0 0\n0 * * * * 0 0 0\n0 0 0 0 * * * *\n* 0 0 0 * * 0 *\n",
              "C(W1) sparsity pattern");
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    o.require(secs < 1.0, "runtime under 1 s");
  });

  criterion("same matroid iff equivalent (n=4..8)", [](Outcome& o) {
    std::size_t pairs = 0;
    for (int n = 4; n <= 8; ++n) {
      std::optional<int> max_k;
      if (n == 8) max_k = 4;
      auto c = check_matroid_iff_equivalent(n, max_k);
      o.absorb(c, n);
      pairs += c.details["pairs"].get<std::size_t>();
    }
    o.detail << pairs << " ordered pairs";
  });

  criterion("exact iff uniform (n<=8)", [](Outcome& o) {
    std::size_t cases = 0;
    for (int n = 4; n <= 8; ++n) {
      auto c = check_exact_iff_uniform(n);
      o.absorb(c, n);
      cases += c.cases;
    }
    o.detail << cases << " subdiagrams";
  });

  criterion("contraction identity (n<=8)", [](Outcome& o) {
    std::size_t cases = 0;
    for (int n = 4; n <= 8; ++n) {
      auto c = check_contraction_identity(n);
      o.absorb(c, n);
      cases += c.cases;
    }
    o.detail << cases << " exact subdiagrams";
  });

  criterion("class size = Catalan product (n<=8)", [](Outcome& o) {
    for (int n = 4; n <= 8; ++n) {
      o.absorb(check_class_sizes(n), n);
      // Independent census: diagrams sharing a matroid.
      auto all = enumerate_weakly_admissible(n);
      std::map<std::vector<VertexSet>, std::size_t> census;
      for (const auto& d : all) ++census[matroid_of(d).bases()];
      for (const auto& d : all) {
        o.require(equivalence_class_size(d) == census[matroid_of(d).bases()],
                  "census " + to_json(d).dump());
      }
    }
    // The chain example: a literal "support size" reading of the formula
    // would give Cat(3)^2 = 25; the census finds 4.
    o.detail << "chain example class size " << equivalence_class(chain_w1()).size();
  });

  criterion("equivalence classes = parallel classes (n=4..7)", [](Outcome& o) {
    for (int n = 4; n <= 7; ++n) {
      std::size_t eq = key_classes(n);
      std::size_t par = count_nonparallel_faces(n);
      o.require(eq == par, "n=" + std::to_string(n));
      o.detail << "n=" << n << ":" << par << " ";
    }
    // Brute-force value at n=5 from distinct naive matroids.
    std::set<std::vector<std::vector<int>>> distinct;
    for (int k = 0; k <= 2; ++k) {
      for (const auto& ps : oracle::weakly_admissible_sets(5, k)) {
        distinct.insert(oracle::bases(5, ps, oracle::range(5)));
      }
    }
    o.require(distinct.size() == 7 && count_nonparallel_faces(5) == 7, "n=5 is 7");
  });

  criterion("parallel faces iff equivalent, normals (n<=6)", [](Outcome& o) {
    for (int n = 4; n <= 6; ++n) {
      auto poly = default_polygon(n);
      auto all = enumerate_dissections(n);
      for (const auto& a : all) {
        for (const auto& b : all) {
          o.require(faces_parallel(poly, a, b) ==
                        equivalent(tau_inverse(a), tau_inverse(b)),
                    "pair at n=" + std::to_string(n));
        }
      }
      o.absorb(check_face_geometry(n), n);
    }
    auto poly = default_polygon(5);
    auto w = omega_plus(poly, {1, 3}, ChordSide::kBetween);
    o.require(sgn(dot(w, edge_direction(poly, 2, 3, 4, 5))) != 0,
              "pentagon crossing witness");
    o.require(!faces_parallel(poly, PolygonDissection(5, {{1, 3}}),
                              PolygonDissection(5, {{2, 5}})),
              "pentagon witness faces not parallel");
  });

  criterion("enumeration counts", [](Outcome& o) {
    const std::map<int, std::size_t> golden{{4, 3}, {5, 11}, {6, 45}, {7, 197}};
    for (auto [n, count] : golden) {
      o.require(oracle::noncrossing_chord_sets(n).size() == count,
                "naive generator n=" + std::to_string(n));
      o.require(enumerate_weakly_admissible(n).size() == count,
                "enumeration n=" + std::to_string(n));
    }
    for (int n = 3; n <= 9; ++n) {
      o.require(enumerate_dissections(n, n - 3).size() ==
                    static_cast<std::size_t>(oracle::catalan(n - 2)),
                "triangulations n=" + std::to_string(n));
    }
    o.require(enumerate_weakly_admissible(8, 3).size() ==
                  oracle::weakly_admissible_sets(8, 3).size(),
              "n=8 k=3 cross-check");
  });

  criterion("realization oracle (100 samples, n<=6)", [](Outcome& o) {
    std::vector<WilsonLoopDiagram> pool;
    for (int n = 3; n <= 6; ++n) {
      auto ds = enumerate_weakly_admissible(n);
      pool.insert(pool.end(), ds.begin(), ds.end());
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto& d = pool[s % pool.size()];
      try {
        o.require(realization_rank_oracle(d, s) == matroid_of(d), to_json(d).dump());
      } catch (const RealizationError& e) {
        o.require(false, e.what());
      }
    }
    o.detail << pool.size() << " diagrams";
  });

  criterion("performance budget", [](Outcome& o) {
    int code = 0;
    double six = timed_cli("verify --n 6 --level 2", code);
    o.require(code == 0 && six < 60, "n=6 level 2");
    double seven = timed_cli("verify --n 7 --level 2", code);
    o.require(code == 0 && seven < 600, "n=7 level 2");
    o.detail << "n=6 " << six << "s, n=7 " << seven << "s";
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
