#pragma once

#include <vector>

#include "oracles.hpp"
#include "wld/diagram.hpp"
#include "wld/matroid.hpp"

inline wld::WilsonLoopDiagram make(int n, const oracle::Pairs& pairs) {
  std::vector<wld::Propagator> props;
  for (auto [a, b] : pairs) props.emplace_back(a, b);
  return {n, std::move(props)};
}

inline oracle::Pairs pairs_of(const wld::WilsonLoopDiagram& d) {
  oracle::Pairs out;
  for (const auto& p : d.propagators()) out.push_back({p.i(), p.j()});
  return out;
}

inline std::vector<std::vector<int>> as_lists(
    const std::vector<wld::VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(s.to_vector());
  return out;
}

// Diagrams from the worked examples.
inline wld::WilsonLoopDiagram example_diagram() {
  return make(8, {{1, 4}, {2, 4}, {5, 8}});
}
inline wld::WilsonLoopDiagram chain_w1() {
  return make(8, {{1, 4}, {2, 4}, {5, 7}, {5, 8}});
}
inline wld::WilsonLoopDiagram chain_w2() {
  return make(8, {{1, 4}, {2, 4}, {5, 8}, {6, 8}});
}
inline wld::WilsonLoopDiagram chain_w3() {
  return make(8, {{1, 4}, {1, 3}, {5, 8}, {6, 8}});
}
