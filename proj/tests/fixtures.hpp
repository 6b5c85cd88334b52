#pragma once

#include "rindep/graph.hpp"

namespace fixtures {

// The co-chordal graph of the worked example, labelled
// x1 = 1, y1 = 2, y2 = 3, w1 = 4, w2 = 5, w3 = 6.
inline constexpr int x1 = 1, y1 = 2, y2 = 3, w1 = 4, w2 = 5, w3 = 6;

inline rindep::Graph example_complement() {
  return rindep::Graph::build(6, {{y1, y2}, {y1, x1}, {x1, y2}, {y2, w1}, {w1, w2}, {w2, w3}});
}

inline rindep::Graph example_graph() { return rindep::complement(example_complement()); }

}  // namespace fixtures
