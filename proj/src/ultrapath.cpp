#include "ugk/ultrapath.hpp"

#include <algorithm>

#include "ugk/errors.hpp"

namespace ugk {

bool is_path(const Ultragraph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.has_edge(p[i])) return false;
    if (i > 0 && !g.range(p[i - 1]).contains(g.source(p[i]))) return false;
  }
  return true;
}

void require_path(const Ultragraph& g, const Path& p) {
  if (!is_path(g, p)) throw UndefinedError("not a path: " + path_to_string(g, p));
}

bool is_prefix(const Path& prefix, const Path& of) {
  return prefix.size() <= of.size() && std::equal(prefix.begin(), prefix.end(), of.begin());
}

Path concat(const Path& a, const Path& b) {
  Path out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string path_to_string(const Ultragraph& g, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (g.has_edge(p[i]) || p[i].schema < g.schema_count())
      out += (i ? "." : "") + g.edge_name(p[i]);
    else
      out += (i ? "." : "") + std::string("?");
  }
  return out;
}

bool is_ultrapath(const Ultragraph& g, const Ultrapath& x) {
  if (!is_path(g, x.path) || !g.decompose(x.set)) return false;
  return x.path.empty() || x.set.is_subset_of(g.range(x.path.back()));
}

Ultrapath concat(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y) {
  if (x.path.empty() && y.path.empty()) {
    EPSet c = x.set.intersect(y.set);
    if (c.is_empty()) throw UndefinedError("concatenation of disjoint generalized vertices");
    return {{}, c};
  }
  if (y.path.empty()) {
    EPSet c = x.set.intersect(y.set);
    if (c.is_empty()) throw UndefinedError("concatenation undefined: sets do not meet");
    return {x.path, c};
  }
  if (!x.set.contains(g.source(y.path.front())))
    throw UndefinedError("concatenation undefined: source not in set");
  return {concat(x.path, y.path), y.set};
}

bool disjoint(const Ultragraph& g, const Ultrapath& x, const Ultrapath& y) {
  if (x.path == y.path) return !x.set.intersects(y.set);
  if (is_prefix(x.path, y.path)) return !x.set.contains(g.source(y.path[x.path.size()]));
  if (is_prefix(y.path, x.path)) return !y.set.contains(g.source(x.path[y.path.size()]));
  return true;
}

BoundaryPoint BoundaryPoint::finite(Path prefix, int mie) {
  BoundaryPoint x;
  x.kind_ = Kind::Finite;
  x.head_ = std::move(prefix);
  x.mie_ = mie;
  return x;
}

BoundaryPoint BoundaryPoint::periodic(Path head, Path cycle) {
  if (cycle.empty()) throw UndefinedError("periodic point needs a nonempty cycle");
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cycle[i] == cycle[i % d];
    if (ok) {
      cycle.resize(d);
      break;
    }
  }
  while (!head.empty() && head.back() == cycle.back()) {
    head.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  BoundaryPoint x;
  x.kind_ = Kind::Periodic;
  x.head_ = std::move(head);
  x.cycle_ = std::move(cycle);
  return x;
}

std::optional<std::size_t> BoundaryPoint::length() const {
  if (kind_ == Kind::Finite) return head_.size();
  return std::nullopt;
}

EdgeRef BoundaryPoint::edge_at(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  if (kind_ == Kind::Finite) throw UndefinedError("edge index past the end of a finite point");
  return cycle_[(i - head_.size()) % cycle_.size()];
}

Path BoundaryPoint::first(std::size_t k) const {
  Path out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(edge_at(i));
  return out;
}

bool BoundaryPoint::starts_with(const Path& p) const {
  if (kind_ == Kind::Finite && p.size() > head_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (edge_at(i) != p[i]) return false;
  return true;
}

bool is_boundary_point(const Ultragraph& g, const BoundaryPoint& x) {
  if (x.is_finite()) {
    if (x.mie() < 0 || static_cast<std::size_t>(x.mie()) >= g.mie_sets().size()) return false;
    return is_ultrapath(g, {x.head(), g.mie_sets()[x.mie()]});
  }
  Path unrolled = concat(concat(x.head(), x.cycle()), x.cycle());
  return is_path(g, unrolled);
}

void require_boundary_point(const Ultragraph& g, const BoundaryPoint& x) {
  if (!is_boundary_point(g, x)) throw UndefinedError("not a boundary path: " + point_to_string(g, x));
}

BoundaryPoint shift(const BoundaryPoint& x) {
  if (x.is_finite()) {
    if (x.head().empty()) throw UndefinedError("shift of a length-zero point");
    return BoundaryPoint::finite(Path(x.head().begin() + 1, x.head().end()), x.mie());
  }
  if (!x.head().empty()) return BoundaryPoint::periodic(Path(x.head().begin() + 1, x.head().end()), x.cycle());
  Path c = x.cycle();
  std::rotate(c.begin(), c.begin() + 1, c.end());
  return BoundaryPoint::periodic({}, c);
}

BoundaryPoint drop(const BoundaryPoint& x, std::size_t k) {
  BoundaryPoint y = x;
  for (std::size_t i = 0; i < k; ++i) y = shift(y);
  return y;
}

BoundaryPoint prepend(const Ultragraph& g, const Path& p, const BoundaryPoint& x) {
  if (p.empty()) return x;
  require_path(g, p);
  const EPSet r = g.range(p.back());
  if (x.is_finite() && x.head().empty()) {
    if (!g.mie_sets().at(x.mie()).is_subset_of(r)) throw UndefinedError("emitter not inside the last range");
  } else if (!r.contains(g.source(x.edge_at(0)))) {
    throw UndefinedError("path cannot be followed by the point");
  }
  if (x.is_finite()) return BoundaryPoint::finite(concat(p, x.head()), x.mie());
  return BoundaryPoint::periodic(concat(p, x.head()), x.cycle());
}

std::string point_to_string(const Ultragraph& g, const BoundaryPoint& x) {
  if (x.is_finite()) return "fin(" + path_to_string(g, x.head()) + "; " + Ultragraph::mie_name(x.mie()) + ")";
  return "evp(" + path_to_string(g, x.head()) + "; " + path_to_string(g, x.cycle()) + ")";
}

}  // namespace ugk
