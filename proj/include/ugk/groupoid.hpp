#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugk/cylinder.hpp"

namespace ugk {

/// Z(alpha, beta, A, F): the compact open bisection sending beta.z to
/// alpha.z for every continuation z allowed by D(beta, A, F).
struct Bisection {
  Path alpha;
  Path beta;
  EPSet set;
  EdgeSet excluded;

  friend bool operator==(const Bisection&, const Bisection&) = default;
  friend auto operator<=>(const Bisection& a, const Bisection& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    if (auto c = a.set <=> b.set; c != 0) return c;
    return a.excluded <=> b.excluded;
  }
};

/// Validates paths and set, and filters `excluded` to epsilon(set).
Bisection make_bisection(const Ultragraph& g, Path alpha, Path beta, EPSet set, EdgeSet excluded = {});
Cylinder source(const Ultragraph& g, const Bisection& z);
Cylinder range(const Ultragraph& g, const Bisection& z);
bool is_empty(const Ultragraph& g, const Bisection& z);
Bisection inverse(const Bisection& z);
/// Throws UndefinedError when x is outside the source.
BoundaryPoint apply(const Ultragraph& g, const Bisection& z, const BoundaryPoint& x);
std::optional<Bisection> intersect(const Ultragraph& g, const Bisection& a, const Bisection& b);
/// Product a.b of bisections (b acts first).
std::optional<Bisection> compose(const Ultragraph& g, const Bisection& a, const Bisection& b);
/// `Z(alpha; beta; set; {F})`
std::string to_string(const Ultragraph& g, const Bisection& z);

struct Arrow {
  BoundaryPoint range;
  std::int64_t lag = 0;
  BoundaryPoint source;
};

/// Searches shift exponents m, n <= bound with m - n = lag and
/// shift^m(range) = shift^n(source).
bool is_arrow(const Arrow& a, std::size_t bound = 64);

/// Points reachable from x by dropping a prefix and then adding a path of
/// length at most `depth`. Branching is capped per step; the result is
/// sorted and free of duplicates.
std::vector<BoundaryPoint> orbit_enumerate(const Ultragraph& g, const BoundaryPoint& x, std::size_t depth,
                                           std::size_t max_points = 20000);

struct IsolationReport {
  bool isolated = false;
  std::string certificate;
};

IsolationReport is_isolated(const Ultragraph& g, const BoundaryPoint& x);

}  // namespace ugk
