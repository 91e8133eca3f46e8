#include "ugk/cylinder.hpp"

#include <algorithm>
#include <map>

#include "ugk/errors.hpp"

namespace ugk {

struct CylinderAccess {
  static Cylinder make(Path p, EPSet s, EdgeSet f) {
    return Cylinder(Cylinder::Unchecked{}, std::move(p), std::move(s), std::move(f));
  }
};

namespace {

EdgeSet filter_to(const Ultragraph& g, const EdgeSet& f, const EPSet& b) {
  EdgeSet out;
  for (const auto& e : f)
    if (g.has_edge(e) && b.contains(g.source(e))) out.insert(e);
  return out;
}

Cylinder make(const Ultragraph& g, Path p, EPSet s, const EdgeSet& f) {
  EdgeSet kept = filter_to(g, f, s);
  return CylinderAccess::make(std::move(p), std::move(s), std::move(kept));
}

EdgeSet unite(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::string set_to_string(const Ultragraph& g, const EPSet& s) {
  auto d = g.decompose(s);
  if (!d || d->mies.empty()) return s.to_string();
  std::string out;
  for (int k : d->mies) out += (out.empty() ? "" : " | ") + Ultragraph::mie_name(k);
  if (!d->finite_part.is_empty()) out += " | " + d->finite_part.to_string();
  EPSet check = d->finite_part;
  for (int k : d->mies) check = check.unite(g.mie_sets()[k]);
  return check == s ? out : s.to_string();
}

}  // namespace

Cylinder::Cylinder(Unchecked, Path prefix, EPSet set, EdgeSet excluded)
    : prefix_(std::move(prefix)), set_(std::move(set)), excluded_(std::move(excluded)) {}

Cylinder::Cylinder(const Ultragraph& g, Path prefix, EPSet set, EdgeSet excluded)
    : prefix_(std::move(prefix)), set_(std::move(set)) {
  require_path(g, prefix_);
  if (!set_.is_empty() && !g.decompose(set_))
    throw ValidationError(set_.to_string() + " is not a generalized vertex");
  if (!prefix_.empty() && !set_.is_subset_of(g.range(prefix_.back())))
    throw ValidationError("cylinder set is not inside the range of the prefix");
  excluded_ = filter_to(g, excluded, set_);
}

Cylinder Cylinder::whole(const Ultragraph& g) { return CylinderAccess::make({}, g.vertices(), {}); }

bool Cylinder::contains(const Ultragraph& g, const BoundaryPoint& x) const {
  if (!x.starts_with(prefix_)) return false;
  const std::size_t n = prefix_.size();
  if (x.is_finite() && *x.length() == n) return g.mie_sets().at(x.mie()).is_subset_of(set_);
  EdgeRef e = x.edge_at(n);
  return set_.contains(g.source(e)) && !excluded_.count(e);
}

bool Cylinder::is_empty(const Ultragraph& g) const {
  if (set_.is_empty()) return true;
  if (!g.mies_within(set_).empty() || g.epsilon_is_infinite(set_)) return false;
  for (const auto& e : g.out_edges_all(set_))
    if (!excluded_.count(e)) return false;
  return true;
}

std::string Cylinder::to_string(const Ultragraph& g) const {
  std::string f;
  for (const auto& e : excluded_) f += (f.empty() ? "" : ",") + g.edge_name(e);
  return "D(" + path_to_string(g, prefix_) + "; " + set_to_string(g, set_) + "; {" + f + "})";
}

std::optional<Cylinder> intersect(const Ultragraph& g, const Cylinder& a, const Cylinder& b) {
  if (a.prefix() == b.prefix()) {
    EPSet s = a.set().intersect(b.set());
    if (s.is_empty()) return std::nullopt;
    return make(g, a.prefix(), s, unite(a.excluded(), b.excluded()));
  }
  const Cylinder* shorter = &a;
  const Cylinder* longer = &b;
  if (a.prefix().size() > b.prefix().size()) std::swap(shorter, longer);
  if (!is_prefix(shorter->prefix(), longer->prefix())) return std::nullopt;
  EdgeRef e = longer->prefix()[shorter->prefix().size()];
  if (shorter->set().contains(g.source(e)) && !shorter->excluded().count(e)) return *longer;
  return std::nullopt;
}

std::vector<Cylinder> difference(const Ultragraph& g, const Cylinder& a, const Cylinder& b) {
  const Path& al = a.prefix();
  const Path& be = b.prefix();
  if (al == be) {
    std::vector<Cylinder> out;
    EPSet kset;
    for (int k : g.mies_within(a.set()))
      if (!g.mie_sets()[k].is_subset_of(b.set())) kset = kset.unite(g.mie_sets()[k]);
    EPSet main_set = a.set().minus(b.set()).unite(kset);
    EPSet rest = kset.intersect(b.set());
    if (!main_set.is_empty()) {
      EdgeSet f = a.excluded();
      for (const auto& e : g.out_edges_all(rest)) f.insert(e);
      out.push_back(make(g, al, main_set, f));
    }
    for (const auto& e : b.excluded()) {
      if (a.excluded().count(e) || !a.set().contains(g.source(e))) continue;
      out.push_back(CylinderAccess::make(concat(al, Path{e}), g.range(e), {}));
    }
    return out;
  }
  if (is_prefix(be, al)) {
    EdgeRef e = al[be.size()];
    if (b.set().contains(g.source(e)) && !b.excluded().count(e)) return {};
    return {a};
  }
  if (is_prefix(al, be)) {
    EdgeRef e = be[al.size()];
    if (!a.set().contains(g.source(e)) || a.excluded().count(e)) return {a};
    EdgeSet f = a.excluded();
    f.insert(e);
    std::vector<Cylinder> out{CylinderAccess::make(al, a.set(), f)};
    auto deeper = difference(g, CylinderAccess::make(concat(al, Path{e}), g.range(e), {}), b);
    out.insert(out.end(), deeper.begin(), deeper.end());
    return out;
  }
  return {a};
}

Cylinder union_same_prefix(const Ultragraph& g, const Cylinder& a, const Cylinder& b) {
  if (a.prefix() != b.prefix()) throw PreconditionViolated("cylinders have different prefixes");
  EdgeSet f;
  for (const auto& e : a.excluded())
    if (b.excluded().count(e) || !b.set().contains(g.source(e))) f.insert(e);
  for (const auto& e : b.excluded())
    if (!a.set().contains(g.source(e))) f.insert(e);
  return CylinderAccess::make(a.prefix(), a.set().unite(b.set()), f);
}

Cylinder shift_image(const Ultragraph& g, const Cylinder& c) {
  if (c.prefix().empty()) throw UndefinedError("shift image of a cylinder with empty prefix");
  return make(g, Path(c.prefix().begin() + 1, c.prefix().end()), c.set(), c.excluded());
}

std::optional<BoundaryPoint> point_through(const Ultragraph& g, const Path& p, std::size_t depth) {
  if (p.empty()) return std::nullopt;
  std::size_t budget = 20000;
  Path cur = p;
  std::optional<BoundaryPoint> found;
  // Ranges already searched without success, with the depth left then.
  std::map<EPSet, std::size_t> dead;
  auto dfs = [&](auto&& self) -> bool {
    if (budget-- == 0) return false;
    EPSet r = g.range(cur.back());
    const std::size_t left = depth > cur.size() ? depth - cur.size() : 0;
    if (auto it = dead.find(r); it != dead.end() && it->second >= left) return false;
    auto ms = g.mies_within(r);
    if (!ms.empty()) {
      found = BoundaryPoint::finite(cur, ms.front());
      return true;
    }
    if (cur.size() >= depth) return false;
    auto next = g.out_edges(r, 3);
    for (const auto& e : next) {
      auto it = std::find(cur.begin(), cur.end(), e);
      if (it != cur.end()) {
        found = BoundaryPoint::periodic(Path(cur.begin(), it), Path(it, cur.end()));
        return true;
      }
    }
    for (const auto& e : next) {
      cur.push_back(e);
      if (self(self)) return true;
      cur.pop_back();
    }
    dead[r] = left;
    return false;
  };
  dfs(dfs);
  return found;
}

BoundaryPoint witness(const Ultragraph& g, const Cylinder& c) {
  auto ms = g.mies_within(c.set());
  if (!ms.empty()) return BoundaryPoint::finite(c.prefix(), ms.front());
  for (const auto& e : g.out_edges(c.set(), 8)) {
    if (c.excluded().count(e)) continue;
    if (auto x = point_through(g, concat(c.prefix(), Path{e}))) return *x;
  }
  throw WitnessNotFound("no representable point found in " + c.to_string(g));
}

ClopenSet ClopenSet::from_cylinders(const Ultragraph& g, const std::vector<Cylinder>& cs) {
  ClopenSet acc;
  for (const auto& c : cs) acc = acc.unite(g, ClopenSet(c));
  return acc;
}

bool ClopenSet::contains(const Ultragraph& g, const BoundaryPoint& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Cylinder& c) { return c.contains(g, x); });
}

bool ClopenSet::is_empty(const Ultragraph& g) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const Cylinder& c) { return c.is_empty(g); });
}

ClopenSet ClopenSet::unite(const Ultragraph& g, const ClopenSet& o) const {
  ClopenSet out = *this;
  for (const auto& c : o.minus(g, *this).parts_) out.parts_.push_back(c);
  if (out.parts_.size() > kMaxParts) throw NormalizationOverflow("clopen set exceeds part limit");
  return out;
}

ClopenSet ClopenSet::intersect(const Ultragraph& g, const ClopenSet& o) const {
  ClopenSet out;
  for (const auto& a : parts_)
    for (const auto& b : o.parts_)
      if (auto c = ugk::intersect(g, a, b)) out.parts_.push_back(*c);
  if (out.parts_.size() > kMaxParts) throw NormalizationOverflow("clopen set exceeds part limit");
  return out;
}

ClopenSet ClopenSet::minus(const Ultragraph& g, const ClopenSet& o) const {
  ClopenSet out;
  for (const auto& a : parts_) {
    std::vector<Cylinder> pieces{a};
    for (const auto& b : o.parts_) {
      std::vector<Cylinder> next;
      for (const auto& p : pieces) {
        auto d = difference(g, p, b);
        for (auto& c : d)
          if (!c.is_empty(g)) next.push_back(std::move(c));
      }
      pieces = std::move(next);
      if (pieces.size() > kMaxParts) throw NormalizationOverflow("clopen set exceeds part limit");
    }
    out.parts_.insert(out.parts_.end(), pieces.begin(), pieces.end());
  }
  return out;
}

bool ClopenSet::equals(const Ultragraph& g, const ClopenSet& o) const {
  return minus(g, o).is_empty(g) && o.minus(g, *this).is_empty(g);
}

bool ClopenSet::is_subset_of(const Ultragraph& g, const ClopenSet& o) const { return minus(g, o).is_empty(g); }

std::optional<BoundaryPoint> ClopenSet::distinguishing_point(const Ultragraph& g, const ClopenSet& o) const {
  for (const auto* d : {&*this, &o}) {
    const ClopenSet& other = d == this ? o : *this;
    for (const auto& c : d->minus(g, other).parts_)
      if (!c.is_empty(g)) return witness(g, c);
  }
  return std::nullopt;
}

ClopenSet ClopenSet::normalized(const Ultragraph& g) const {
  std::map<Path, std::optional<Cylinder>> merged;
  for (const auto& c : parts_) {
    if (c.is_empty(g)) continue;
    auto& slot = merged[c.prefix()];
    slot = slot ? union_same_prefix(g, *slot, c) : c;
  }
  ClopenSet out;
  for (auto& [p, c] : merged) out.parts_.push_back(*c);
  return out;
}

std::string ClopenSet::to_string(const Ultragraph& g) const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const auto& c : parts_) out += (out.empty() ? "" : " + ") + c.to_string(g);
  return out;
}

}  // namespace ugk
