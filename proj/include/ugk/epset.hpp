#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ugk {

using Natural = std::uint64_t;

/// An eventually periodic subset of the natural numbers.
///
/// Membership of n < threshold is base[n]; membership of n >= threshold is
/// cycle[n % period]. The representation is always canonical (minimal period,
/// then minimal threshold), so two EPSets are equal as sets iff their fields
/// are identical.
class EPSet {
 public:
  /// The empty set.
  EPSet();

  /// Builds from raw fields and canonicalizes. `base.size()` is the threshold,
  /// `cycle.size()` the period (must be positive).
  EPSet(std::vector<bool> base, std::vector<bool> cycle);

  static EPSet empty() { return EPSet(); }
  static EPSet all();
  static EPSet finite(const std::vector<Natural>& elements);
  static EPSet singleton(Natural n) { return finite({n}); }
  /// {start, start+step, start+2*step, ...}; step must be positive.
  static EPSet progression(Natural start, Natural step);
  /// Everything except the listed elements.
  static EPSet cofinite(const std::vector<Natural>& excluded);
  /// [lo, hi)
  static EPSet interval(Natural lo, Natural hi);

  Natural threshold() const { return base_.size(); }
  Natural period() const { return cycle_.size(); }
  const std::vector<bool>& base() const { return base_; }
  const std::vector<bool>& cycle() const { return cycle_; }

  bool contains(Natural n) const;
  bool is_empty() const;
  bool is_finite() const;
  /// Number of elements, or nullopt when infinite.
  std::optional<Natural> cardinality() const;
  bool is_subset_of(const EPSet& other) const;
  bool intersects(const EPSet& other) const;

  /// Smallest element; nullopt when empty.
  std::optional<Natural> min() const;
  /// Largest element of a finite nonempty set.
  std::optional<Natural> max() const;

  /// Elements strictly below `bound`, ascending.
  std::vector<Natural> enumerate_up_to(Natural bound) const;
  /// The first `count` elements (fewer if the set is finite and smaller).
  std::vector<Natural> first(std::size_t count) const;

  EPSet unite(const EPSet& other) const;
  EPSet intersect(const EPSet& other) const;
  EPSet minus(const EPSet& other) const;
  EPSet complement() const;

  /// {coef*n + offset : n in this}. Every image element must be >= 0.
  EPSet affine_image(Natural coef, std::int64_t offset) const;
  /// {n : coef*n + offset in this} (negative values are never members).
  EPSet affine_preimage(Natural coef, std::int64_t offset) const;

  /// Literal form accepted by parse_epset, e.g. `{0,1} | ap(3,1)`.
  std::string to_string() const;
  nlohmann::json to_json() const;
  static EPSet from_json(const nlohmann::json& j);

  friend bool operator==(const EPSet&, const EPSet&) = default;
  /// Lexicographic order on (threshold, period, base, cycle).
  friend std::strong_ordering operator<=>(const EPSet& a, const EPSet& b);

 private:
  void canonicalize();

  std::vector<bool> base_;
  std::vector<bool> cycle_;
};

/// Parses the set literal grammar: `{n1,n2,...}`, `all`, `empty`,
/// `ap(b,s)`, `fin{...}`, `cof{...}`, combined with `|`, `&`, `\` and
/// parentheses. `&` binds tighter than `|` and `\`.
EPSet parse_epset(std::string_view text);

Natural lcm(Natural a, Natural b);

}  // namespace ugk
