#pragma once

#include <string>
#include <string_view>

#include "ugk/ultragraph.hpp"

namespace ugk {

/// Parses the ultragraph DSL:
///
///   universe <set>
///   edge <name> : src <affine> -> { <item>, ... }
///   family <name>(n) for n in <set> : src <affine> -> { <item>, ... }
///
/// An item is an affine term in n or a set expression. `#` starts a
/// comment. Without a universe line the universe is empty. Throws
/// ParseError with line and column.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

Presentation load_presentation(const std::string& path);

}  // namespace ugk
