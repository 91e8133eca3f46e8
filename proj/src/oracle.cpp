#include "ugk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ugk/errors.hpp"

namespace ugk::oracle {

namespace {

constexpr std::size_t kClosureCap = 50000;
constexpr std::size_t kLevelCap = 2000;

Mask bit(Natural v) { return v < 64 ? Mask{1} << v : 0; }

const MaterializedEdge* lookup(const TruncatedGraph& t, EdgeRef e) {
  auto it = std::lower_bound(t.edges.begin(), t.edges.end(), e,
                             [](const MaterializedEdge& m, EdgeRef r) { return m.ref < r; });
  return it != t.edges.end() && it->ref == e ? &*it : nullptr;
}

}  // namespace

Mask truncate(const EPSet& s, Natural n) {
  Mask m = 0;
  for (Natural v = 0; v < std::min<Natural>(n, 64); ++v)
    if (s.contains(v)) m |= bit(v);
  return m;
}

TruncatedGraph materialize(const Ultragraph& g, Natural n) {
  if (n == 0 || n > 64) throw PreconditionViolated("truncation must lie in [1, 64]");
  TruncatedGraph t;
  t.n = n;
  t.universe = truncate(g.vertices(), n);
  for (std::uint32_t s = 0; s < g.schema_count(); ++s)
    for (Natural i : g.schema(s).domain.enumerate_up_to(n)) {
      EdgeRef e{s, i};
      Natural src = g.source(e);
      if (src >= n) continue;
      t.edges.push_back({e, src, truncate(g.range(e), n)});
    }
  return t;
}

std::vector<Mask> lattice_mies(const TruncatedGraph& t) {
  const Natural thr = std::max<Natural>(1, t.n / 4);
  std::vector<Natural> emitted(t.n, 0);
  for (const auto& e : t.edges) ++emitted[e.source];
  Mask ie = 0;
  for (Natural v = 0; v < t.n; ++v)
    if (emitted[v] >= thr) ie |= bit(v);

  std::set<Mask> closure;
  for (const auto& e : t.edges)
    if (Mask r = e.range & t.universe) closure.insert(r);
  std::vector<Mask> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    std::vector<Mask> all(closure.begin(), closure.end());
    for (Mask a : frontier)
      for (Mask b : all)
        if (Mask c = a & b; c && closure.insert(c).second) next.push_back(c);
    if (closure.size() > kClosureCap) throw BudgetExceeded("truncated range closure too large");
    frontier = std::move(next);
  }

  auto infinite = [&](Mask m) { return static_cast<Natural>(std::popcount(m)) >= thr; };
  std::vector<Mask> out;
  for (Natural v = 0; v < t.n; ++v)
    if (ie & bit(v)) out.push_back(bit(v));
  for (Mask k : closure) {
    if (!infinite(k) || (k & ie)) continue;
    bool minimal = std::none_of(closure.begin(), closure.end(),
                                [&](Mask j) { return j != k && infinite(j) && (j & ~k) == 0; });
    if (minimal) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const Ultragraph& g, const TruncatedGraph& t, const Cylinder& c, const BoundaryPoint& x) {
  const Path& beta = c.prefix();
  if (x.is_finite() && x.head().size() < beta.size()) return false;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (x.edge_at(i) != beta[i]) return false;
  const Mask b = truncate(c.set(), t.n);
  if (x.is_finite() && x.head().size() == beta.size()) {
    Mask m = truncate(g.mie_sets().at(x.mie()), t.n);
    return (m & ~b) == 0;
  }
  EdgeRef e = x.edge_at(beta.size());
  const MaterializedEdge* me = lookup(t, e);
  Natural src = me ? me->source : g.source(e);
  return (b & bit(src)) && !c.excluded().count(e);
}

std::vector<BoundaryPoint> point_enum(const Ultragraph& g, const TruncatedGraph& t, std::size_t complexity,
                                      Natural edge_index_cap, std::size_t max_points) {
  std::vector<const MaterializedEdge*> pool;
  for (const auto& e : t.edges)
    if (e.ref.index < edge_index_cap) pool.push_back(&e);
  std::set<BoundaryPoint> found;
  auto add = [&](const BoundaryPoint& x) {
    if (found.size() < max_points && is_boundary_point(g, x)) found.insert(x);
  };
  const int mie_count = static_cast<int>(g.mie_sets().size());
  for (int k = 0; k < mie_count && complexity >= 1; ++k) add(BoundaryPoint::finite({}, k));

  std::vector<std::vector<const MaterializedEdge*>> level;
  for (const auto* e : pool) level.push_back({e});
  for (std::size_t len = 1; len <= complexity && !level.empty(); ++len) {
    for (const auto& p : level) {
      Path path;
      for (const auto* e : p) path.push_back(e->ref);
      if (len + 1 <= complexity)
        for (int k = 0; k < mie_count; ++k)
          if ((truncate(g.mie_sets()[k], t.n) & ~p.back()->range) == 0) add(BoundaryPoint::finite(path, k));
      for (std::size_t i = 0; i < len; ++i)
        if (p.back()->range & bit(p[i]->source))
          add(BoundaryPoint::periodic(Path(path.begin(), path.begin() + static_cast<long>(i)),
                                      Path(path.begin() + static_cast<long>(i), path.end())));
    }
    if (len == complexity) break;
    std::vector<std::vector<const MaterializedEdge*>> next;
    for (const auto& p : level) {
      for (const auto* e : pool) {
        if (!(p.back()->range & bit(e->source))) continue;
        auto q = p;
        q.push_back(e);
        next.push_back(std::move(q));
        if (next.size() >= kLevelCap) break;
      }
      if (next.size() >= kLevelCap) break;
    }
    level = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace ugk::oracle
