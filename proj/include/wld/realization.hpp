#pragma once

#include <cstdint>
#include <stdexcept>

#include "wld/diagram.hpp"
#include "wld/matroid.hpp"
#include "wld/rational.hpp"

namespace wld {

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric filling of the C(W) pattern. Structural zeros stay zero and
/// every symbolic slot holds a nonzero integer.
struct RealizationSample {
  CMatrixPattern pattern;
  RationalMatrix entries;  // k rows, n columns
};

struct RealizationOptions {
  /// Entries are drawn uniformly from 1..max_entry.
  int max_entry = 1000;
  /// Flip the sign of each entry with probability 1/2.
  bool signed_entries = false;
  /// Fresh samples tried before giving up on agreement with matroid_of.
  int max_attempts = 8;
};

RealizationSample sample_realization(const WilsonLoopDiagram& d,
                                     std::uint64_t seed,
                                     const RealizationOptions& options = {});

/// The column matroid of a sample: bases are the column sets of size
/// rank(matrix) with full-rank submatrix.
Matroid realized_matroid(const RealizationSample& sample);

/// Realizes M(W) numerically. Samples are drawn until one agrees with
/// matroid_of(d); a non-generic draw can lose bases, so a mismatch
/// triggers a resample. Throws RealizationError once max_attempts samples
/// have all disagreed.
Matroid realization_rank_oracle(const WilsonLoopDiagram& d, std::uint64_t seed,
                                const RealizationOptions& options = {});

}  // namespace wld
