#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ugk/ultragraph.hpp"

namespace ugk {

using Path = std::vector<EdgeRef>;

/// s(e_{i+1}) in r(e_i) for consecutive edges, and every edge exists.
bool is_path(const Ultragraph& g, const Path& p);
void require_path(const Ultragraph& g, const Path& p);
bool is_prefix(const Path& prefix, const Path& of);
Path concat(const Path& a, const Path& b);
/// Edge names joined by '.'; the empty path prints as "".
std::string path_to_string(const Ultragraph& g, const Path& p);

/// (alpha, A): A is a generalized vertex, contained in r(alpha) when alpha
/// is nonempty.
struct Ultrapath {
  Path path;
  EPSet set;
  friend bool operator==(const Ultrapath&, const Ultrapath&) = default;
};

bool is_ultrapath(const Ultragraph& g, const Ultrapath& x);
/// Concatenation; throws UndefinedError where it is not defined.
Ultrapath concat(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y);
bool disjoint(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y);

/// A boundary path of the restricted kind the library manipulates exactly:
/// a finite ultrapath ending in a minimal infinite emitter, or an
/// eventually periodic infinite path head.cycle.cycle...
class BoundaryPoint {
 public:
  enum class Kind { Finite, Periodic };

  static BoundaryPoint finite(Path prefix, int mie);
  /// Canonicalizes: minimal cycle, then the shortest head.
  static BoundaryPoint periodic(Path head, Path cycle);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Prefix of a finite point, or head of a periodic one.
  const Path& head() const { return head_; }
  const Path& cycle() const { return cycle_; }
  int mie() const { return mie_; }

  /// Number of edges of a finite point; nullopt for infinite ones.
  std::optional<std::size_t> length() const;
  /// Throws UndefinedError past the end of a finite point.
  EdgeRef edge_at(std::size_t i) const;
  /// The first k edges (throws for finite points shorter than k).
  Path first(std::size_t k) const;
  /// True when the first |p| edges equal p.
  bool starts_with(const Path& p) const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  Kind kind_ = Kind::Finite;
  Path head_;
  Path cycle_;
  int mie_ = -1;
};

bool is_boundary_point(const Ultragraph& g, const BoundaryPoint& x);
void require_boundary_point(const Ultragraph& g, const BoundaryPoint& x);

/// One-sided shift; undefined on length-zero finite points.
BoundaryPoint shift(const BoundaryPoint& x);
BoundaryPoint drop(const BoundaryPoint& x, std::size_t k);
/// p.x; throws UndefinedError when p cannot be followed by x.
BoundaryPoint prepend(const Ultragraph& g, const Path& p, const BoundaryPoint& x);

/// `fin(e1.e3; mie#0)` or `evp(e1; en[5].e3)`.
std::string point_to_string(const Ultragraph& g, const BoundaryPoint& x);

}  // namespace ugk
