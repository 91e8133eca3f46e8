#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ugk/fullgroup.hpp"

namespace ugk {

/// `e1.en[5].e2`; the empty string is the empty path.
Path parse_path(const Ultragraph& g, std::string_view text);
/// `fin(path; mie#k)` or `evp(head; cycle)`.
BoundaryPoint parse_point(const Ultragraph& g, std::string_view text);
/// `D(path; set; {edges})`; the excluded edges may be omitted. Sets may
/// name emitters as `mie#k`.
Cylinder parse_cylinder(const Ultragraph& g, std::string_view text);
/// `Z(alpha; beta; set; {edges})`.
Bisection parse_bisection(const Ultragraph& g, std::string_view text);

using Value = std::variant<FullGroupElement, CompactBisection, ClopenSet, BoundaryPoint, std::int64_t, bool>;

std::string value_to_string(const Ultragraph& g, const Value& v);

/// Evaluator for small group-word scripts. One statement per line:
///
///   let NAME = EXPR
///   print EXPR
///
/// EXPR combines names, the literals above, `[a, b]` (commutator), `a * b`
/// (b acts first), `a^k`, and the functions id, all, pi_hat, pi_tilde,
/// inv, order, support, image, apply, equals, is_identity, contains,
/// union, meet, minus, witness, isolated, f1, f2, f3.
class Script {
 public:
  Script(const Ultragraph& g, std::size_t bound = 8) : g_(g), bound_(bound) {}

  /// Runs every statement and returns the printed lines.
  std::vector<std::string> run(std::string_view source);
  Value evaluate(std::string_view expression);
  void bind(const std::string& name, Value v) { env_[name] = std::move(v); }

 private:
  const Ultragraph& g_;
  std::size_t bound_;
  std::map<std::string, Value> env_;
};

}  // namespace ugk
