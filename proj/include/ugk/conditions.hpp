#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ugk/ultrapath.hpp"

namespace ugk {

enum class Verdict { Holds, Fails, Unknown };

std::string to_string(Verdict v);

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::Unknown;
  std::size_t bound = 0;
  std::string certificate;

  nlohmann::json to_json() const;
};

struct LoopSearch {
  std::vector<Path> loops;
  /// Set when the search hit the length bound, the branching cap or the
  /// loop cap, so that `loops` may be incomplete.
  bool truncated = false;
};

/// Simple loops based at v (no intermediate edge has source v) of length
/// at most `bound`, stopping after `cap` loops.
LoopSearch enumerate_simple_loops(const Ultragraph& g, Natural v, std::size_t bound, std::size_t cap = 64);
/// Edges e != loop[i+1] with source in r(loop[i]), at most `cap`.
std::vector<EdgeRef> exits_of_loop(const Ultragraph& g, const Path& loop, std::size_t cap = 8);

ConditionReport check_L(const Ultragraph& g, std::size_t bound);
ConditionReport check_K(const Ultragraph& g, std::size_t bound);
ConditionReport check_T(const Ultragraph& g, std::size_t bound);
ConditionReport check_ND(const Ultragraph& g);
ConditionReport check_infty(const Ultragraph& g, std::size_t bound);
ConditionReport check_W(const Ultragraph& g, std::size_t bound);
/// Effectiveness of the groupoid, decided through the exit condition.
ConditionReport effectiveness_report(const Ultragraph& g, std::size_t bound);

struct DegenerateObject {
  std::string tag;  // IE1, IE2, V1, V2, V3
  std::string description;
};

std::vector<DegenerateObject> degenerate_catalog(const Ultragraph& g);

/// Runs a checker by name: L, K, T, ND, INF, W.
ConditionReport run_condition(const Ultragraph& g, const std::string& name, std::size_t bound);

}  // namespace ugk
