#include "ugk/fullgroup.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ugk/errors.hpp"

namespace ugk {

namespace {

Bisection identity_on(const Cylinder& c) { return {c.prefix(), c.prefix(), c.set(), c.excluded()}; }

bool pairwise_disjoint(const Ultragraph& g, const std::vector<Cylinder>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (auto c = intersect(g, cs[i], cs[j]); c && !c->is_empty(g)) return false;
  return true;
}

}  // namespace

ClopenSet source_set(const Ultragraph& g, const CompactBisection& v) {
  std::vector<Cylinder> cs;
  for (const auto& z : v) cs.push_back(source(g, z));
  return ClopenSet::from_cylinders(g, cs);
}

ClopenSet range_set(const Ultragraph& g, const CompactBisection& v) {
  std::vector<Cylinder> cs;
  for (const auto& z : v) cs.push_back(range(g, z));
  return ClopenSet::from_cylinders(g, cs);
}

FullGroupElement::FullGroupElement(const Ultragraph& g, std::vector<Bisection> rows) {
  std::vector<Cylinder> s, r;
  for (const auto& z : rows) {
    s.push_back(source(g, z));
    r.push_back(range(g, z));
  }
  if (!pairwise_disjoint(g, s) || !pairwise_disjoint(g, r))
    throw PreconditionViolated("bisection pieces overlap");
  if (!source_set(g, rows).equals(g, range_set(g, rows)))
    throw PreconditionViolated("pieces do not form a full bisection");
  *this = from_pieces(g, std::move(rows));
}

FullGroupElement FullGroupElement::from_pieces(const Ultragraph& g, std::vector<Bisection> pieces) {
  std::map<std::pair<Path, Path>, std::optional<Cylinder>> merged;
  for (const auto& z : pieces) {
    if (z.alpha == z.beta) continue;
    Cylinder s = source(g, z);
    if (s.is_empty(g)) continue;
    auto& slot = merged[{z.alpha, z.beta}];
    slot = slot ? union_same_prefix(g, *slot, s) : s;
  }
  FullGroupElement out;
  for (const auto& [key, c] : merged) out.rows_.push_back({key.first, key.second, c->set(), c->excluded()});
  return out;
}

BoundaryPoint FullGroupElement::apply(const Ultragraph& g, const BoundaryPoint& x) const {
  for (const auto& z : rows_)
    if (source(g, z).contains(g, x)) return ugk::apply(g, z, x);
  return x;
}

ClopenSet FullGroupElement::support(const Ultragraph& g) const { return source_set(g, rows_); }

ClopenSet FullGroupElement::image(const Ultragraph& g, const ClopenSet& c) const {
  std::vector<Cylinder> out;
  for (const auto& z : rows_) {
    const ClopenSet inside = c.intersect(g, ClopenSet(source(g, z)));
    for (const auto& piece : inside.parts())
      if (auto m = compose(g, z, identity_on(piece))) out.push_back(range(g, *m));
  }
  ClopenSet fixed = c.minus(g, support(g));
  out.insert(out.end(), fixed.parts().begin(), fixed.parts().end());
  return ClopenSet::from_cylinders(g, out);
}

std::string FullGroupElement::to_string(const Ultragraph& g) const {
  if (rows_.empty()) return "id";
  std::string out;
  for (const auto& z : rows_) out += (out.empty() ? "" : " + ") + ugk::to_string(g, z);
  return out;
}

FullGroupElement compose(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b) {
  ClopenSet a_src = a.support(g);
  ClopenSet b_rng = range_set(g, b.rows());
  std::vector<Bisection> pieces;
  for (const auto& z : b.rows()) {
    for (const auto& w : a.rows())
      if (auto c = compose(g, w, z)) pieces.push_back(*c);
    const ClopenSet rest = ClopenSet(range(g, z)).minus(g, a_src);
    for (const auto& piece : rest.parts())
      if (auto c = compose(g, identity_on(piece), z)) pieces.push_back(*c);
  }
  for (const auto& w : a.rows()) {
    const ClopenSet rest = ClopenSet(source(g, w)).minus(g, b_rng);
    for (const auto& piece : rest.parts())
      if (auto c = compose(g, w, identity_on(piece))) pieces.push_back(*c);
  }
  return FullGroupElement::from_pieces(g, std::move(pieces));
}

FullGroupElement inverse(const FullGroupElement& a) {
  FullGroupElement out;
  for (const auto& z : a.rows_) out.rows_.push_back(inverse(z));
  std::sort(out.rows_.begin(), out.rows_.end());
  return out;
}

bool equals(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b) {
  return compose(g, a, inverse(b)).is_identity();
}

FullGroupElement commutator(const Ultragraph& g, const FullGroupElement& a, const FullGroupElement& b) {
  return compose(g, compose(g, inverse(a), inverse(b)), compose(g, a, b));
}

FullGroupElement power(const Ultragraph& g, const FullGroupElement& a, std::int64_t k) {
  FullGroupElement base = k < 0 ? inverse(a) : a;
  FullGroupElement out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = compose(g, base, out);
  return out;
}

std::optional<std::size_t> order(const Ultragraph& g, const FullGroupElement& a, std::size_t cap) {
  FullGroupElement p = a;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = compose(g, a, p);
  }
  return std::nullopt;
}

FullGroupElement pi_tilde(const Ultragraph& g, const CompactBisection& v) {
  if (!source_set(g, v).equals(g, range_set(g, v)))
    throw PreconditionViolated("source and range of the bisection differ");
  return FullGroupElement(g, v);
}

FullGroupElement pi_hat(const Ultragraph& g, const CompactBisection& v) {
  if (!source_set(g, v).intersect(g, range_set(g, v)).is_empty(g))
    throw PreconditionViolated("source and range of the bisection meet");
  std::vector<Bisection> rows = v;
  for (const auto& z : v) rows.push_back(inverse(z));
  return FullGroupElement(g, std::move(rows));
}

FullGroupElement random_element(const Ultragraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Path> paths;
  for (const auto& e : g.out_edges(g.vertices(), 3)) {
    paths.push_back({e});
    for (const auto& f : g.out_edges(g.range(e), 2)) paths.push_back({e, f});
  }
  FullGroupElement out;
  if (paths.size() < 2) return out;
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  int factors = 1 + static_cast<int>(rng() % 3);
  for (int tries = 0; factors > 0 && tries < 200; ++tries) {
    const Path& a = paths[pick(rng)];
    const Path& b = paths[pick(rng)];
    if (is_prefix(a, b) || is_prefix(b, a)) continue;
    EPSet s = g.range(a.back()).intersect(g.range(b.back()));
    if (s.is_empty() || !g.decompose(s)) continue;
    out = compose(g, pi_hat(g, {make_bisection(g, a, b, s)}), out);
    --factors;
  }
  return out;
}

}  // namespace ugk
