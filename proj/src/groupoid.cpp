#include "ugk/groupoid.hpp"

#include <algorithm>
#include <set>

#include "ugk/errors.hpp"

namespace ugk {

Bisection make_bisection(const Ultragraph& g, Path alpha, Path beta, EPSet set, EdgeSet excluded) {
  Cylinder s(g, beta, set, excluded);
  Cylinder r(g, alpha, set, excluded);
  return {std::move(alpha), std::move(beta), std::move(set), s.excluded()};
}

Cylinder source(const Ultragraph& g, const Bisection& z) { return Cylinder(g, z.beta, z.set, z.excluded); }

Cylinder range(const Ultragraph& g, const Bisection& z) { return Cylinder(g, z.alpha, z.set, z.excluded); }

bool is_empty(const Ultragraph& g, const Bisection& z) { return source(g, z).is_empty(g); }

Bisection inverse(const Bisection& z) { return {z.beta, z.alpha, z.set, z.excluded}; }

BoundaryPoint apply(const Ultragraph& g, const Bisection& z, const BoundaryPoint& x) {
  if (!source(g, z).contains(g, x)) throw UndefinedError("point is outside the bisection source");
  return prepend(g, z.alpha, drop(x, z.beta.size()));
}

namespace {

bool allows(const Ultragraph& g, const EPSet& set, const EdgeSet& excluded, EdgeRef e) {
  return set.contains(g.source(e)) && !excluded.count(e);
}

EdgeSet unite(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

std::optional<Bisection> intersect(const Ultragraph& g, const Bisection& a, const Bisection& b) {
  if (a.alpha == b.alpha && a.beta == b.beta) {
    EPSet s = a.set.intersect(b.set);
    if (s.is_empty()) return std::nullopt;
    return make_bisection(g, a.alpha, a.beta, s, unite(a.excluded, b.excluded));
  }
  const Bisection* shorter = &a;
  const Bisection* longer = &b;
  if (a.alpha.size() > b.alpha.size()) std::swap(shorter, longer);
  const std::size_t k = longer->alpha.size() - shorter->alpha.size();
  if (!is_prefix(shorter->alpha, longer->alpha) || !is_prefix(shorter->beta, longer->beta) ||
      longer->beta.size() != shorter->beta.size() + k)
    return std::nullopt;
  Path ea(longer->alpha.begin() + static_cast<long>(shorter->alpha.size()), longer->alpha.end());
  Path eb(longer->beta.begin() + static_cast<long>(shorter->beta.size()), longer->beta.end());
  if (ea != eb || !allows(g, shorter->set, shorter->excluded, ea.front())) return std::nullopt;
  return *longer;
}

std::optional<Bisection> compose(const Ultragraph& g, const Bisection& a, const Bisection& b) {
  if (a.beta == b.alpha) {
    EPSet s = a.set.intersect(b.set);
    if (s.is_empty()) return std::nullopt;
    return make_bisection(g, a.alpha, b.beta, s, unite(a.excluded, b.excluded));
  }
  if (is_prefix(a.beta, b.alpha)) {
    Path gamma(b.alpha.begin() + static_cast<long>(a.beta.size()), b.alpha.end());
    if (!allows(g, a.set, a.excluded, gamma.front())) return std::nullopt;
    return make_bisection(g, concat(a.alpha, gamma), b.beta, b.set, b.excluded);
  }
  if (is_prefix(b.alpha, a.beta)) {
    Path gamma(a.beta.begin() + static_cast<long>(b.alpha.size()), a.beta.end());
    if (!allows(g, b.set, b.excluded, gamma.front())) return std::nullopt;
    return make_bisection(g, a.alpha, concat(b.beta, gamma), a.set, a.excluded);
  }
  return std::nullopt;
}

std::string to_string(const Ultragraph& g, const Bisection& z) {
  std::string d = Cylinder(g, z.beta, z.set, z.excluded).to_string(g);
  return "Z(" + path_to_string(g, z.alpha) + "; " + path_to_string(g, z.beta) + d.substr(d.find(';'));
}

bool is_arrow(const Arrow& a, std::size_t bound) {
  for (std::size_t m = 0; m <= bound; ++m) {
    std::int64_t n = static_cast<std::int64_t>(m) - a.lag;
    if (n < 0 || static_cast<std::size_t>(n) > bound) continue;
    if (a.range.is_finite() && m > *a.range.length()) break;
    if (a.source.is_finite() && static_cast<std::size_t>(n) > *a.source.length()) continue;
    if (drop(a.range, m) == drop(a.source, static_cast<std::size_t>(n))) return true;
  }
  return false;
}

std::vector<BoundaryPoint> orbit_enumerate(const Ultragraph& g, const BoundaryPoint& x, std::size_t depth,
                                           std::size_t max_points) {
  constexpr std::size_t kBranch = 4;
  std::set<BoundaryPoint> seen;
  std::vector<BoundaryPoint> frontier;
  BoundaryPoint t = x;
  for (;;) {
    if (!seen.insert(t).second) break;
    frontier.push_back(t);
    if (t.is_finite() && t.head().empty()) break;
    t = shift(t);
  }
  for (std::size_t d = 0; d < depth && !frontier.empty() && seen.size() < max_points; ++d) {
    std::vector<BoundaryPoint> next;
    for (const auto& y : frontier) {
      std::vector<EPSet> into = y.is_finite() && y.head().empty()
                                    ? g.edges_with_range_containing(g.mie_sets()[y.mie()])
                                    : g.edges_into(g.source(y.edge_at(0)));
      for (std::uint32_t s = 0; s < into.size(); ++s)
        for (Natural n : into[s].first(kBranch)) {
          BoundaryPoint z = prepend(g, Path{{s, n}}, y);
          if (seen.insert(z).second) next.push_back(z);
          if (seen.size() >= max_points) break;
        }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

IsolationReport is_isolated(const Ultragraph& g, const BoundaryPoint& x) {
  if (x.is_finite())
    return {false, Ultragraph::mie_name(x.mie()) + " emits infinitely many edges past " +
                       path_to_string(g, x.head())};
  const Path& c = x.cycle();
  for (std::size_t i = 0; i < c.size(); ++i) {
    EdgeRef nxt = c[(i + 1) % c.size()];
    Natural v = g.source(nxt);
    if (g.range(c[i]) != EPSet::singleton(v))
      return {false, "range of " + g.edge_name(c[i]) + " leaves the cycle"};
    auto out = g.out_edges(EPSet::singleton(v), 2);
    if (out.size() != 1) return {false, "vertex " + std::to_string(v) + " emits an exit"};
  }
  return {true, "cycle " + path_to_string(g, c) + " has no exits"};
}

}  // namespace ugk
