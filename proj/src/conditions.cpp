#include "ugk/conditions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ugk/errors.hpp"

namespace ugk {

namespace {

constexpr std::size_t kBranch = 4;
constexpr std::size_t kNodeBudget = 100000;

ConditionReport report(std::string name, Verdict v, std::size_t bound, std::string cert) {
  return {std::move(name), v, bound, std::move(cert)};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

nlohmann::json ConditionReport::to_json() const {
  return {{"condition", condition}, {"verdict", to_string(verdict)}, {"bound", bound}, {"certificate", certificate}};
}

LoopSearch enumerate_simple_loops(const Ultragraph& g, Natural v, std::size_t bound, std::size_t cap) {
  LoopSearch out;
  std::size_t budget = kNodeBudget;
  Path path;
  EdgeSet used;
  auto dfs = [&](auto&& self) -> bool {
    if (budget-- == 0) {
      out.truncated = true;
      return true;
    }
    const EPSet r = g.range(path.back());
    if (r.contains(v)) {
      out.loops.push_back(path);
      if (out.loops.size() >= cap) {
        out.truncated = true;
        return true;
      }
    }
    EPSet onward = r.minus(EPSet::singleton(v));
    if (onward.is_empty()) return false;
    if (path.size() >= bound) {
      out.truncated = true;
      return false;
    }
    bool cut = false;
    auto next = g.out_edges(onward, kBranch, &cut);
    out.truncated |= cut;
    std::stable_partition(next.begin(), next.end(), [&](EdgeRef e) { return g.range(e).contains(v); });
    for (const auto& e : next) {
      if (used.count(e)) continue;
      used.insert(e);
      path.push_back(e);
      bool stop = self(self);
      path.pop_back();
      used.erase(e);
      if (stop) return true;
    }
    return false;
  };
  if (bound == 0) {
    out.truncated = true;
    return out;
  }
  bool cut = false;
  auto first = g.out_edges(EPSet::singleton(v), kBranch, &cut);
  out.truncated |= cut;
  for (const auto& e : first) {
    used.insert(e);
    path.push_back(e);
    bool stop = dfs(dfs);
    path.pop_back();
    used.erase(e);
    if (stop) break;
  }
  return out;
}

std::vector<EdgeRef> exits_of_loop(const Ultragraph& g, const Path& loop, std::size_t cap) {
  std::vector<EdgeRef> out;
  for (std::size_t i = 0; i < loop.size() && out.size() < cap; ++i) {
    EdgeRef next = loop[(i + 1) % loop.size()];
    for (const auto& e : g.out_edges(g.range(loop[i]), cap + 1)) {
      if (e == next || std::find(out.begin(), out.end(), e) != out.end()) continue;
      out.push_back(e);
      if (out.size() >= cap) break;
    }
  }
  return out;
}

ConditionReport check_L(const Ultragraph& g, std::size_t bound) {
  const std::size_t limit = g.window() + bound;
  for (Natural v : g.window_vertices()) {
    Path chain;
    std::set<Natural> seen{v};
    Natural cur = v;
    for (std::size_t step = 0; step < limit; ++step) {
      auto out = g.out_edges(EPSet::singleton(cur), 2);
      if (out.size() != 1) break;
      EPSet r = g.range(out[0]);
      if (r.cardinality() != 1u) break;
      chain.push_back(out[0]);
      Natural next = *r.min();
      if (next == v)
        return report("L", Verdict::Fails, bound, "loop without exit: " + path_to_string(g, chain));
      if (!seen.insert(next).second) break;
      cur = next;
    }
  }
  return report("L", Verdict::Holds, bound,
                "no exit-free loop through vertices below " + std::to_string(g.window()));
}

ConditionReport check_K(const Ultragraph& g, std::size_t bound) {
  std::string unknown;
  for (Natural v : g.window_vertices()) {
    LoopSearch s = enumerate_simple_loops(g, v, bound, 2);
    if (s.loops.size() >= 2) continue;
    if (!s.truncated) {
      if (s.loops.size() == 1)
        return report("K", Verdict::Fails, bound,
                      "vertex " + std::to_string(v) + " has exactly one simple loop: " +
                          path_to_string(g, s.loops[0]));
      continue;
    }
    if (unknown.empty()) unknown = "search exhausted at vertex " + std::to_string(v);
  }
  if (!unknown.empty()) return report("K", Verdict::Unknown, bound, unknown);
  return report("K", Verdict::Holds, bound,
                "every vertex below " + std::to_string(g.window()) + " has no or at least two simple loops");
}

ConditionReport check_T(const Ultragraph& g, std::size_t bound) {
  const Natural window = g.window();
  for (Natural v : g.window_vertices()) {
    std::map<Natural, std::size_t> hits;
    std::vector<Path> level;
    for (const auto& e : g.out_edges(EPSet::singleton(v), kBranch)) level.push_back({e});
    bool found = false;
    std::size_t budget = 5000;
    for (std::size_t len = 1; len <= bound && !level.empty() && !found; ++len) {
      std::vector<Path> next;
      for (const auto& p : level) {
        EPSet r = g.range(p.back());
        for (Natural w : r.enumerate_up_to(window))
          if (++hits[w] >= 2) found = true;
        if (found) break;
        for (const auto& e : g.out_edges(r, kBranch)) {
          if (budget == 0) break;
          --budget;
          Path q = p;
          q.push_back(e);
          next.push_back(std::move(q));
        }
      }
      level = std::move(next);
    }
    if (!found)
      return report("T", Verdict::Unknown, bound,
                    "no vertex reached twice from " + std::to_string(v) + " within the bound");
  }
  return report("T", Verdict::Holds, bound,
                "every vertex below " + std::to_string(window) + " reaches some vertex along two paths");
}

ConditionReport effectiveness_report(const Ultragraph& g, std::size_t bound) {
  ConditionReport r = check_L(g, bound);
  r.condition = "EFFECTIVE";
  return r;
}

}  // namespace ugk
