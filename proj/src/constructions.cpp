#include "ugk/constructions.hpp"

#include <algorithm>

#include "search.hpp"
#include "ugk/conditions.hpp"
#include "ugk/errors.hpp"

namespace ugk {

namespace detail {

namespace {
constexpr std::size_t kBranch = 6;
}

std::vector<Path> bfs_paths(const Ultragraph& g, const EPSet& start, const EdgeSet& skip, std::size_t bound,
                            std::size_t cap) {
  std::vector<Path> out;
  std::vector<Path> level;
  for (const auto& e : g.out_edges(start, kBranch + skip.size()))
    if (!skip.count(e)) level.push_back({e});
  for (std::size_t len = 1; len <= bound && !level.empty(); ++len) {
    std::vector<Path> next;
    for (auto& p : level) {
      if (out.size() >= cap) return out;
      out.push_back(p);
      if (len == bound || out.size() + next.size() >= cap) continue;
      for (const auto& e : g.out_edges(g.range(p.back()), kBranch)) {
        Path q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return out;
}

bool pick_disjoint(const Ultragraph& g, const std::vector<Ultrapath>& candidates, std::vector<Ultrapath>& chosen,
                   std::size_t target) {
  for (const auto& c : candidates) {
    if (chosen.size() >= target) break;
    bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Ultrapath& o) { return disjoint(g, o, c); });
    if (ok) chosen.push_back(c);
  }
  return chosen.size() >= target;
}

}  // namespace detail

namespace {

Path segment(const BoundaryPoint& x, std::size_t from, std::size_t to) {
  Path p;
  for (std::size_t i = from; i < to; ++i) p.push_back(x.edge_at(i));
  return p;
}

}  // namespace

bool is_disjoint_family(const Ultragraph& g, const DisjointFamily& f) {
  if (f.members.empty()) return false;
  EPSet common = f.members.front().set;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (!is_ultrapath(g, f.members[i])) return false;
    common = common.intersect(f.members[i].set);
    for (std::size_t j = i + 1; j < f.members.size(); ++j)
      if (!disjoint(g, f.members[i], f.members[j])) return false;
  }
  return !common.is_empty();
}

DisjointFamily disjoint_loops(const Ultragraph& g, const Path& rho, std::size_t k, std::size_t bound) {
  require_path(g, rho);
  if (rho.empty() || !g.range(rho.back()).contains(g.source(rho.front())))
    throw PreconditionViolated(path_to_string(g, rho) + " is not a loop");
  const Natural v = g.source(rho.front());
  const EPSet r_rho = g.range(rho.back());
  if (k == 1) return {{{rho, r_rho}}, {"single loop"}};
  auto loops = enumerate_simple_loops(g, v, bound, 16).loops;
  if (loops.size() < 2)
    throw WitnessNotFound("insufficient loops at " + std::to_string(v) + " within bound " + std::to_string(bound));
  std::stable_sort(loops.begin(), loops.end(), [](const Path& a, const Path& b) { return a.size() < b.size(); });
  for (const auto& t2 : loops) {
    for (const auto& t1 : loops) {
      if (t1 == t2 || !g.range(t1.back()).intersects(r_rho)) continue;
      DisjointFamily f;
      Path p = t1;
      for (std::size_t i = 0; i < k; ++i) {
        f.members.push_back({p, g.range(p.back())});
        p.insert(p.begin(), t2.begin(), t2.end());
      }
      if (!is_disjoint_family(g, f)) continue;
      f.notes.push_back("t1 = " + path_to_string(g, t1));
      f.notes.push_back("t2 = " + path_to_string(g, t2));
      return f;
    }
  }
  throw WitnessNotFound("insufficient loops at " + std::to_string(v) + ": no pair gives disjoint powers");
}

DisjointFamily disjoint_paths_W(const Ultragraph& g, const Path& alpha, std::size_t count, std::size_t bound) {
  require_path(g, alpha);
  if (alpha.empty()) throw PreconditionViolated("empty path");
  if (count == 0) return {{{{alpha.front()}, g.range(alpha.front())}}, {"n = 1"}};
  const auto paths = detail::bfs_paths(g, EPSet::singleton(g.source(alpha.front())), {}, bound);
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    const Natural w = g.source(alpha[i]);
    const Path head(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(i));
    const EPSet target = EPSet::singleton(w);
    std::vector<Ultrapath> cands;
    for (const auto& p : paths)
      if (p != head && g.range(p.back()).contains(w)) cands.push_back({p, target});
    std::vector<Ultrapath> chosen{{head, target}};
    if (detail::pick_disjoint(g, cands, chosen, count + 1))
      return {chosen, {"n = " + std::to_string(i), "component normalized to {" + std::to_string(w) + "}"}};
  }
  throw WitnessNotFound("no " + std::to_string(count + 1) + " disjoint paths along " + path_to_string(g, alpha) +
                        " within bound " + std::to_string(bound));
}

FourPaths four_disjoint_paths(const Ultragraph& g, const BoundaryPoint& x, std::size_t n, std::size_t bound) {
  if (x.kind() != BoundaryPoint::Kind::Periodic) throw PreconditionViolated("point is not eventually periodic");
  const Path mu = segment(x, 0, n);
  const auto paths = detail::bfs_paths(g, EPSet::singleton(g.source(x.edge_at(n))), {}, bound);
  for (std::size_t m = n + 1; m <= n + bound; ++m) {
    const Path a1 = segment(x, n, m);
    const Natural w = g.source(x.edge_at(m));
    const EPSet target = EPSet::singleton(w);
    std::vector<Ultrapath> cands;
    for (const auto& p : paths)
      if (p != a1 && g.range(p.back()).contains(w)) cands.push_back({concat(mu, p), target});
    std::vector<Ultrapath> chosen{{concat(mu, a1), target}};
    if (!detail::pick_disjoint(g, cands, chosen, 4)) continue;
    FourPaths out{m, {}, target};
    for (auto& u : chosen) out.paths.push_back(std::move(u.path));
    return out;
  }
  throw WitnessNotFound("no four disjoint paths after " + std::to_string(n) + " edges of " + point_to_string(g, x) +
                        " within bound " + std::to_string(bound));
}

}  // namespace ugk
