#include "wld/matching.hpp"

#include <bit>

namespace wld {

BipartiteMatcher::BipartiteMatcher(int right_size)
    : match_of_right_(static_cast<std::size_t>(right_size), -1) {}

bool BipartiteMatcher::add_left_bits(std::uint64_t neighbours) {
  adjacency_.push_back(neighbours);
  std::uint64_t visited = 0;
  if (augment(static_cast<int>(adjacency_.size()) - 1, visited)) {
    ++matched_;
    return true;
  }
  return false;
}

bool BipartiteMatcher::augment(int left, std::uint64_t& visited) {
  std::uint64_t candidates = adjacency_[left] & ~visited;
  while (candidates != 0) {
    int right = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (right >= static_cast<int>(match_of_right_.size())) continue;
    visited |= std::uint64_t{1} << right;
    int owner = match_of_right_[right];
    if (owner < 0 || augment(owner, visited)) {
      match_of_right_[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace wld
