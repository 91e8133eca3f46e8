#pragma once

#include <vector>

#include "ugk/ultrapath.hpp"

namespace ugk::detail {

/// Paths of length 1..bound with first edge sourced in `start` and not in
/// `skip`, breadth first in schema/index order. Branching is capped per
/// step and the total by `cap`.
std::vector<Path> bfs_paths(const Ultragraph& g, const EPSet& start, const EdgeSet& skip, std::size_t bound,
                            std::size_t cap = 4000);

/// Greedily extends `chosen` by candidates disjoint from everything chosen
/// so far, until it holds `target` members. Returns false if it falls short.
bool pick_disjoint(const Ultragraph& g, const std::vector<Ultrapath>& candidates, std::vector<Ultrapath>& chosen,
                   std::size_t target);

}  // namespace ugk::detail
