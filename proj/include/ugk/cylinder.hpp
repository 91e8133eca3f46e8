#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ugk/ultrapath.hpp"

namespace ugk {

/// D(prefix, set, excluded): boundary paths that are (prefix, M) with M a
/// minimal infinite emitter inside `set`, or that continue past `prefix`
/// with an edge whose source lies in `set` and which is not excluded.
/// `excluded` only ever holds edges with source in `set`.
class Cylinder {
 public:
  /// Checks that prefix is a path, set is a generalized vertex inside the
  /// last range and excluded is finite; drops excluded edges outside
  /// epsilon(set).
  Cylinder(const Ultragraph& g, Path prefix, EPSet set, EdgeSet excluded = {});
  /// Whole boundary path space.
  static Cylinder whole(const Ultragraph& g);

  const Path& prefix() const { return prefix_; }
  const EPSet& set() const { return set_; }
  const EdgeSet& excluded() const { return excluded_; }

  bool contains(const Ultragraph& g, const BoundaryPoint& x) const;
  bool is_empty(const Ultragraph& g) const;
  /// `D(e1.e2; mie#0; {e3})`
  std::string to_string(const Ultragraph& g) const;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder& a, const Cylinder& b) {
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    if (auto c = a.set_ <=> b.set_; c != 0) return c;
    return a.excluded_ <=> b.excluded_;
  }

 private:
  struct Unchecked {};
  Cylinder(Unchecked, Path prefix, EPSet set, EdgeSet excluded);
  friend struct CylinderAccess;

  Path prefix_;
  EPSet set_;
  EdgeSet excluded_;
};

/// Empty result means the intersection is empty.
std::optional<Cylinder> intersect(const Ultragraph& g, const Cylinder& a, const Cylinder& b);
/// Pairwise disjoint cylinders covering a minus b.
std::vector<Cylinder> difference(const Ultragraph& g, const Cylinder& a, const Cylinder& b);
/// Union of two cylinders with a common prefix as one cylinder.
Cylinder union_same_prefix(const Ultragraph& g, const Cylinder& a, const Cylinder& b);
/// Image under the shift; the prefix must be nonempty.
Cylinder shift_image(const Ultragraph& g, const Cylinder& c);

/// Some boundary path in a nonempty cylinder; throws WitnessNotFound when
/// no finite or eventually periodic point is found within the search bound.
BoundaryPoint witness(const Ultragraph& g, const Cylinder& c);
/// A boundary path starting with `p` (nonempty path).
std::optional<BoundaryPoint> point_through(const Ultragraph& g, const Path& p, std::size_t depth = 48);

/// Finite union of pairwise disjoint cylinders.
class ClopenSet {
 public:
  static constexpr std::size_t kMaxParts = 100000;

  ClopenSet() = default;
  explicit ClopenSet(Cylinder c) : parts_{std::move(c)} {}
  /// Disjointifies arbitrary cylinders.
  static ClopenSet from_cylinders(const Ultragraph& g, const std::vector<Cylinder>& cs);

  const std::vector<Cylinder>& parts() const { return parts_; }

  bool contains(const Ultragraph& g, const BoundaryPoint& x) const;
  bool is_empty(const Ultragraph& g) const;
  ClopenSet unite(const Ultragraph& g, const ClopenSet& o) const;
  ClopenSet intersect(const Ultragraph& g, const ClopenSet& o) const;
  ClopenSet minus(const Ultragraph& g, const ClopenSet& o) const;
  bool equals(const Ultragraph& g, const ClopenSet& o) const;
  bool is_subset_of(const Ultragraph& g, const ClopenSet& o) const;
  /// A point in the symmetric difference, when there is one.
  std::optional<BoundaryPoint> distinguishing_point(const Ultragraph& g, const ClopenSet& o) const;

  /// Drops empty parts, merges parts with equal prefixes, sorts.
  ClopenSet normalized(const Ultragraph& g) const;
  std::string to_string(const Ultragraph& g) const;

 private:
  std::vector<Cylinder> parts_;
};

}  // namespace ugk
