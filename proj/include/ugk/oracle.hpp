#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ugk/cylinder.hpp"

namespace ugk::oracle {

/// Vertex sets inside [0, 64) as bit masks.
using Mask = std::uint64_t;

Mask truncate(const EPSet& s, Natural n);

struct MaterializedEdge {
  EdgeRef ref;
  Natural source = 0;
  Mask range = 0;
};

/// Edges with index < n and source < n, ranges cut to [0, n).
struct TruncatedGraph {
  Natural n = 0;
  Mask universe = 0;
  std::vector<MaterializedEdge> edges;
};

TruncatedGraph materialize(const Ultragraph& g, Natural n);

/// Minimal infinite emitters computed directly on a truncation: the
/// intersection closure of the truncated ranges, where a set counts as
/// infinite when it has at least n/4 elements and a vertex counts as an
/// infinite emitter when it emits at least n/4 materialized edges.
std::vector<Mask> lattice_mies(const TruncatedGraph& t);

/// Cylinder membership evaluated straight from the definition on masks.
bool member(const Ultragraph& g, const TruncatedGraph& t, const Cylinder& c, const BoundaryPoint& x);

/// Finite and eventually periodic points of complexity at most
/// `complexity` (|prefix|+1, resp. |head|+|cycle|) over edges with index
/// below `edge_index_cap` and source below t.n.
std::vector<BoundaryPoint> point_enum(const Ultragraph& g, const TruncatedGraph& t, std::size_t complexity = 6,
                                      Natural edge_index_cap = 8, std::size_t max_points = 4000);

/// Random valid cylinder with a short prefix.
Cylinder random_cylinder(const Ultragraph& g, const TruncatedGraph& t, std::mt19937_64& rng);

/// Random valid presentation over a small alphabet of EP sets.
Presentation random_presentation(std::mt19937_64& rng);

struct DiffReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t divergences = 0;
  /// Nonempty cylinders without a presentable point, e.g. when every
  /// point below them wanders.
  std::size_t unwitnessed = 0;
  std::vector<std::string> samples;
};

/// Compares intersection, difference, same-prefix union and emptiness of
/// random cylinder pairs, and the normalized difference, with pointwise
/// membership.
DiffReport diff_test(const Ultragraph& g, std::uint64_t seed, std::size_t trials, Natural truncate_at = 64);

}  // namespace ugk::oracle
