#pragma once

#include "scanner.hpp"
#include "ugk/groupoid.hpp"

namespace ugk::detail {

EdgeRef parse_edge(Scanner& s, const Ultragraph& g);
Path parse_path(Scanner& s, const Ultragraph& g);
/// A set expression in which `mie#k` names an emitter.
EPSet parse_component(Scanner& s, const Ultragraph& g);
EdgeSet parse_edge_set(Scanner& s, const Ultragraph& g);
BoundaryPoint parse_point(Scanner& s, const Ultragraph& g);
Cylinder parse_cylinder(Scanner& s, const Ultragraph& g);
Bisection parse_bisection(Scanner& s, const Ultragraph& g);

}  // namespace ugk::detail
