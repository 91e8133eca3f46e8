#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ugk/fullgroup.hpp"

namespace ugk {

/// Pairwise disjoint ultrapaths sharing a nonempty range intersection.
struct DisjointFamily {
  std::vector<Ultrapath> members;
  std::vector<std::string> notes;
};

/// Re-checks pairwise disjointness and that the member ranges meet.
bool is_disjoint_family(const Ultragraph& g, const DisjointFamily& f);

/// k pairwise disjoint loops at s(rho), of the form t2^i t1 for two simple
/// loops t1, t2. Throws WitnessNotFound when the search up to `bound`
/// finds no suitable pair.
DisjointFamily disjoint_loops(const Ultragraph& g, const Path& rho, std::size_t k, std::size_t bound);

/// N+1 disjoint ultrapaths in s(alpha) p s(alpha_{i+1}) for some i, one of
/// them an initial segment of alpha.
DisjointFamily disjoint_paths_W(const Ultragraph& g, const Path& alpha, std::size_t count, std::size_t bound);

struct FourPaths {
  std::size_t m = 0;
  /// Full paths x_1..x_n a_i; the first one is a prefix of x.
  std::vector<Path> paths;
  EPSet set;
};

/// For an eventually periodic x: m > n and four paths from s(x_{n+1}) into
/// s(x_{m+1}), the first being x_{n+1}..x_m, with disjoint ultrapaths
/// (x_1..x_n a_i, {s(x_{m+1})}).
FourPaths four_disjoint_paths(const Ultragraph& g, const BoundaryPoint& x, std::size_t n, std::size_t bound);

struct Witness {
  FullGroupElement element;
  /// A script (see Script) binding the element to `w` as a commutator of
  /// two involutions.
  std::string word;
  std::vector<std::string> notes;
  /// Postcondition checks, each recomputed from the returned element.
  nlohmann::json verification;
};

Witness f3_witness(const Ultragraph& g, const ClopenSet& a, std::size_t bound = 8);
Witness f1_witness(const Ultragraph& g, const BoundaryPoint& x, const ClopenSet& a, std::size_t bound = 8);
Witness f2_witness(const Ultragraph& g, const FullGroupElement& tau, const ClopenSet& a, std::size_t bound = 8);

}  // namespace ugk
