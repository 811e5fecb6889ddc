#pragma once

#include <cstdint>
#include <vector>

namespace wld {

/// Incremental maximum bipartite matching (Kuhn's augmenting paths) with at
/// most 64 right-hand nodes. Each left node is given as a bitmask of its
/// right-hand neighbours.
///
/// The matching stays maximum after every add_left, so a failed insertion
/// means the left nodes added so far violate Hall's condition.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(int right_size);

  template <typename Set>
  bool add_left(Set neighbours) {
    return add_left_bits(neighbours.bits());
  }
  bool add_left_bits(std::uint64_t neighbours);

  int matched() const { return matched_; }

 private:
  bool augment(int left, std::uint64_t& visited);

  std::vector<std::uint64_t> adjacency_;
  std::vector<int> match_of_right_;
  int matched_ = 0;
};

}  // namespace wld
