#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wld/json_io.hpp"

namespace wld {

/// Outcome of one exhaustive check. `counterexample` holds the first
/// failing instance in canonical enumeration order, which is also the
/// lexicographically least one.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::optional<Json> counterexample;
  Json details = Json::object();
};

struct VerifyReport {
  int n = 0;
  int level = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  Json to_json() const;
};

/// Largest n accepted for each verification level.
int max_n_for_level(int level);

// Level 1: invariants of each module on every diagram / dissection of [n].
CheckResult check_flat_identities(int n);
CheckResult check_density_against_subset_scan(int n);
CheckResult check_matroid_invariants(int n);
CheckResult check_dissection_structure(int n);
CheckResult check_face_geometry(int n);

// Level 2: cross-module identities.
CheckResult check_contraction_identity(int n);
CheckResult check_exact_iff_uniform(int n);
CheckResult check_matroid_iff_equivalent(int n,
                                         std::optional<int> max_k = std::nullopt);
CheckResult check_class_sizes(int n);
CheckResult check_retriangulation_closure(int n);
CheckResult check_parallel_iff_equivalent(int n);
CheckResult check_nonparallel_count(int n);

// Level 3: numeric realizations of C(W).
CheckResult check_realizations(int n, std::uint64_t seed);

/// Runs every check at levels 1..level. Throws std::invalid_argument when
/// n is outside 4..max_n_for_level(level) or level is not 1, 2 or 3.
VerifyReport verify(int n, int level, std::uint64_t seed = 1);

}  // namespace wld
