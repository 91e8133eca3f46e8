#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugk/groupoid.hpp"

namespace ugk {

/// A compact open bisection given as basic pieces with pairwise disjoint
/// sources and pairwise disjoint ranges.
using CompactBisection = std::vector<Bisection>;

ClopenSet source_set(const Ultragraph& g, const CompactBisection& v);
ClopenSet range_set(const Ultragraph& g, const CompactBisection& v);

/// Element of the topological full group: a full bisection stored by its
/// non-identity pieces. Points outside every piece are fixed.
class FullGroupElement {
 public:
  FullGroupElement() = default;
  /// Checks disjointness and that the pieces cover the same clopen set on
  /// both sides.
  FullGroupElement(const Ultragraph& g, std::vector<Bisection> rows);

  static FullGroupElement identity() { return {}; }

  const std::vector<Bisection>& rows() const { return rows_; }
  bool is_identity() const { return rows_.empty(); }

  BoundaryPoint apply(const Ultragraph& g, const BoundaryPoint& x) const;
  /// Union of the sources of pieces that move points.
  ClopenSet support(const Ultragraph& g) const;
  ClopenSet image(const Ultragraph& g, const ClopenSet& c) const;
  std::string to_string(const Ultragraph& g) const;

 private:
  friend FullGroupElement compose(const Ultragraph&, const FullGroupElement&, const FullGroupElement&);
  friend FullGroupElement inverse(const FullGroupElement&);
  static FullGroupElement from_pieces(const Ultragraph& g, std::vector<Bisection> pieces);

  std::vector<Bisection> rows_;
};

/// a o b: b acts first.
FullGroupElement compose(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b);
FullGroupElement inverse(const FullGroupElement& a);
bool equals(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b);
/// a^-1 b^-1 a b
FullGroupElement commutator(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b);
FullGroupElement power(const Ultragraph& g, const FullGroupElement& a, std::int64_t k);
/// Smallest k in [1, cap] with a^k = 1.
std::optional<std::size_t> order(const Ultragraph& g, const FullGroupElement& a, std::size_t cap = 64);

/// V acting on s(V) = r(V) and the identity elsewhere.
FullGroupElement pi_tilde(const Ultragraph& g, const CompactBisection& v);
/// The involution swapping s(V) and r(V) along V; needs s(V) and r(V)
/// disjoint.
FullGroupElement pi_hat(const Ultragraph& g, const CompactBisection& v);

/// Product of a few random involutions built from disjoint cylinders.
FullGroupElement random_element(const Ultragraph& g, std::uint64_t seed);

}  // namespace ugk
