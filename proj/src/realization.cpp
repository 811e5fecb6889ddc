#include "wld/realization.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace wld {

RealizationSample sample_realization(const WilsonLoopDiagram& d,
                                     std::uint64_t seed,
                                     const RealizationOptions& options) {
  if (options.max_entry < 1) {
    throw std::invalid_argument("max_entry must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(1, options.max_entry);
  std::bernoulli_distribution negate(0.5);

  CMatrixPattern pattern = c_matrix_pattern(d);
  RationalMatrix entries(static_cast<std::size_t>(pattern.rows()),
                         RationalVector(static_cast<std::size_t>(d.n()), 0));
  for (int r = 0; r < pattern.rows(); ++r) {
    for (int c = 1; c <= d.n(); ++c) {
      if (!pattern.nonzero(r, c)) continue;
      int v = value(rng);
      if (options.signed_entries && negate(rng)) v = -v;
      entries[r][c - 1] = v;
    }
  }
  return {std::move(pattern), std::move(entries)};
}

namespace {

RationalMatrix columns(const RationalMatrix& m, VertexSet cols) {
  RationalMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (int c : cols) out[r].push_back(m[r][c - 1]);
  }
  return out;
}

}  // namespace

Matroid realized_matroid(const RealizationSample& sample) {
  const int n = sample.pattern.cols();
  VertexSet ground = VertexSet::range(n);
  const int r = sample.entries.empty() ? 0 : matrix_rank(sample.entries);
  std::vector<VertexSet> bases;
  for_each_subset(ground, [&](VertexSet s) {
    if (s.size() != r) return;
    if (r == 0 || matrix_rank(columns(sample.entries, s)) == r) {
      bases.push_back(s);
    }
  });
  return {ground, std::move(bases)};
}

Matroid realization_rank_oracle(const WilsonLoopDiagram& d, std::uint64_t seed,
                                const RealizationOptions& options) {
  Matroid expected = matroid_of(d);
  // The first attempt uses the caller's seed as is; retries derive theirs.
  std::vector<std::uint64_t> seeds{seed};
  std::mt19937_64 seeder(seed);
  while (static_cast<int>(seeds.size()) < options.max_attempts) {
    seeds.push_back(seeder());
  }
  for (std::uint64_t attempt_seed : seeds) {
    Matroid realized = realized_matroid(sample_realization(d, attempt_seed,
                                                           options));
    if (realized == expected) return realized;
  }
  throw RealizationError("realized matroid disagrees with M(W) after " +
                         std::to_string(seeds.size()) + " samples");
}

}  // namespace wld
