#include "ugk/ultragraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ugk/errors.hpp"

namespace ugk {

namespace {

constexpr std::size_t kSemilatticeCap = 4096;
constexpr Natural kWindowCap = 1024;

Natural magnitude(std::int64_t x) { return static_cast<Natural>(x < 0 ? -x : x); }

EPSet image(const EPSet& dom, const Affine& f) { return dom.affine_image(f.coef, f.offset); }

EPSet preimage(const EPSet& target, const Affine& f) { return target.affine_preimage(f.coef, f.offset); }

bool nonnegative_on(const Affine& f, const EPSet& dom) {
  auto lo = dom.min();
  if (!lo) return true;
  return static_cast<std::int64_t>(f.coef * *lo) + f.offset >= 0;
}

}  // namespace

std::optional<Natural> Affine::eval(Natural n) const {
  std::int64_t v = static_cast<std::int64_t>(coef * n) + offset;
  if (v < 0) return std::nullopt;
  return static_cast<Natural>(v);
}

std::string Affine::to_string() const {
  if (coef == 0) return std::to_string(offset);
  std::string out = coef == 1 ? "n" : std::to_string(coef) + "*n";
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += "-" + std::to_string(-offset);
  return out;
}

std::string to_string(Diagnostic::Kind kind) {
  switch (kind) {
    case Diagnostic::Kind::BadSchema: return "bad-schema";
    case Diagnostic::Kind::EmptyRange: return "empty-range";
    case Diagnostic::Kind::OutsideUniverse: return "outside-universe";
    case Diagnostic::Kind::NoSink: return "sink";
    case Diagnostic::Kind::RfumViolation: return "rfum";
  }
  return "unknown";
}

Ultragraph::Ultragraph(Presentation presentation) : pres_(std::move(presentation)) {
  for (const auto& s : pres_.schemas) {
    NormalizedSchema n{s.range_const, {}};
    for (const auto& t : s.range_terms) {
      if (t.coef > 0)
        n.moving.push_back(t);
      else if (t.offset >= 0)
        n.core = n.core.unite(EPSet::singleton(static_cast<Natural>(t.offset)));
    }
    norm_.push_back(std::move(n));
  }

  std::set<Natural> ie;
  for (const auto& s : pres_.schemas)
    if (s.source.coef == 0 && !s.domain.is_finite() && s.source.offset >= 0)
      ie.insert(static_cast<Natural>(s.source.offset));
  ie_vertices_.assign(ie.begin(), ie.end());

  Natural t = pres_.universe.threshold(), p = pres_.universe.period(), spread = 0;
  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& s = pres_.schemas[i];
    std::vector<Affine> maps = norm_[i].moving;
    maps.push_back(s.source);
    for (const auto& f : maps) {
      t = std::max(t, f.coef * s.domain.threshold() + magnitude(f.offset));
      p = lcm(p, std::max<Natural>(1, f.coef) * s.domain.period());
      spread = std::max(spread, magnitude(f.offset));
    }
    t = std::max(t, norm_[i].core.threshold());
    p = lcm(p, norm_[i].core.period());
    if (p > kWindowCap) p = kWindowCap;
  }
  window_ = std::min(kWindowCap, t + 2 * p + spread + 1);

  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& dom = pres_.schemas[i].domain;
    if (dom.is_empty()) continue;
    non_sources_ = non_sources_.unite(norm_[i].core);
    for (const auto& f : norm_[i].moving)
      if (nonnegative_on(f, dom)) non_sources_ = non_sources_.unite(image(dom, f));
  }
  non_sources_ = non_sources_.intersect(pres_.universe);

  compute_mies();
}

void Ultragraph::compute_mies() {
  std::set<EPSet> closure;
  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& dom = pres_.schemas[i].domain;
    if (dom.is_empty()) continue;
    if (!dom.is_finite()) {
      EPSet c = norm_[i].core.intersect(pres_.universe);
      if (!c.is_empty()) closure.insert(c);
      continue;
    }
    for (Natural n : dom.enumerate_up_to(dom.threshold())) {
      bool ok = std::all_of(norm_[i].moving.begin(), norm_[i].moving.end(),
                            [&](const Affine& f) { return f.eval(n).has_value(); });
      if (ok) closure.insert(range({static_cast<std::uint32_t>(i), n}).intersect(pres_.universe));
    }
  }
  std::vector<EPSet> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<EPSet> next;
    std::vector<EPSet> current(closure.begin(), closure.end());
    for (const auto& a : frontier)
      for (const auto& b : current) {
        EPSet c = a.intersect(b);
        if (!c.is_empty() && closure.insert(c).second) next.push_back(c);
      }
    if (closure.size() > kSemilatticeCap)
      throw BudgetExceeded("range semilattice exceeds " + std::to_string(kSemilatticeCap) + " elements");
    frontier = std::move(next);
  }
  semilattice_.assign(closure.begin(), closure.end());

  std::vector<EPSet> found;
  for (Natural v : ie_vertices_) found.push_back(EPSet::singleton(v));
  for (const auto& k : semilattice_) {
    if (k.is_finite()) continue;
    bool has_ie = std::any_of(ie_vertices_.begin(), ie_vertices_.end(),
                              [&](Natural v) { return k.contains(v); });
    if (has_ie) continue;
    bool minimal = std::none_of(semilattice_.begin(), semilattice_.end(), [&](const EPSet& j) {
      return !j.is_finite() && j != k && j.is_subset_of(k);
    });
    if (minimal) found.push_back(k);
  }
  std::sort(found.begin(), found.end());
  mies_ = std::move(found);
}

std::vector<Diagnostic> Ultragraph::validate() const {
  std::vector<Diagnostic> out;
  std::set<std::string> names;
  for (std::uint32_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& s = pres_.schemas[i];
    auto bad = [&](const std::string& msg) {
      out.push_back({Diagnostic::Kind::BadSchema, s.name + ": " + msg, std::nullopt, std::nullopt});
    };
    if (s.name.empty()) bad("empty name");
    if (!names.insert(s.name).second) bad("duplicate name");
    if (s.domain.is_empty()) bad("empty index set");
    if (!nonnegative_on(s.source, s.domain)) bad("source takes negative values");
    for (const auto& f : s.range_terms)
      if (!nonnegative_on(f, s.domain)) bad("range term " + f.to_string() + " takes negative values");
  }
  if (!out.empty()) return out;

  const EPSet& u = pres_.universe;
  EPSet emitting;
  for (std::uint32_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& s = pres_.schemas[i];
    EdgeRef first{i, *s.domain.min()};
    if (norm_[i].core.is_empty() && norm_[i].moving.empty())
      out.push_back({Diagnostic::Kind::EmptyRange, s.name + ": empty range", std::nullopt, first});
    EPSet src = image(s.domain, s.source);
    emitting = emitting.unite(src);
    EPSet reach = norm_[i].core;
    for (const auto& f : norm_[i].moving) reach = reach.unite(image(s.domain, f));
    EPSet stray = src.unite(reach).minus(u);
    if (!stray.is_empty())
      out.push_back({Diagnostic::Kind::OutsideUniverse,
                     s.name + ": vertex " + std::to_string(*stray.min()) + " is not in the universe",
                     stray.min(), first});
  }
  EPSet sinks = u.minus(emitting);
  if (u.is_empty())
    out.push_back({Diagnostic::Kind::NoSink, "the universe is empty", std::nullopt, std::nullopt});
  if (!sinks.is_empty())
    out.push_back({Diagnostic::Kind::NoSink, "vertex " + std::to_string(*sinks.min()) + " emits no edge",
                   sinks.min(), std::nullopt});
  if (!out.empty()) return out;
  return rfum_check(*this);
}

void Ultragraph::require_valid() const {
  auto d = validate();
  if (!d.empty()) throw ValidationError(to_string(d.front().kind) + ": " + d.front().message);
}

bool Ultragraph::has_edge(EdgeRef e) const {
  return e.schema < pres_.schemas.size() && pres_.schemas[e.schema].domain.contains(e.index);
}

Natural Ultragraph::source(EdgeRef e) const {
  if (!has_edge(e)) throw UndefinedError("no such edge");
  auto v = pres_.schemas[e.schema].source.eval(e.index);
  if (!v) throw UndefinedError("edge source is negative");
  return *v;
}

EPSet Ultragraph::range(EdgeRef e) const {
  if (!has_edge(e)) throw UndefinedError("no such edge");
  std::vector<Natural> pts;
  for (const auto& f : norm_[e.schema].moving) {
    auto v = f.eval(e.index);
    if (!v) throw UndefinedError("edge range term is negative");
    pts.push_back(*v);
  }
  return norm_[e.schema].core.unite(EPSet::finite(pts));
}

std::string Ultragraph::edge_name(EdgeRef e) const {
  const auto& s = pres_.schemas.at(e.schema);
  if (!s.family) return s.name;
  return s.name + "[" + std::to_string(e.index) + "]";
}

std::optional<std::uint32_t> Ultragraph::find_schema(const std::string& name) const {
  for (std::uint32_t i = 0; i < pres_.schemas.size(); ++i)
    if (pres_.schemas[i].name == name) return i;
  return std::nullopt;
}

std::vector<EPSet> Ultragraph::epsilon(const EPSet& a) const {
  std::vector<EPSet> out;
  for (const auto& s : pres_.schemas) out.push_back(s.domain.intersect(preimage(a, s.source)));
  return out;
}

bool Ultragraph::epsilon_is_infinite(const EPSet& a) const {
  auto eps = epsilon(a);
  return std::any_of(eps.begin(), eps.end(), [](const EPSet& s) { return !s.is_finite(); });
}

std::vector<EdgeRef> Ultragraph::out_edges(const EPSet& a, std::size_t cap, bool* truncated) const {
  std::vector<EdgeRef> out;
  if (truncated) *truncated = false;
  auto eps = epsilon(a);
  for (std::uint32_t i = 0; i < eps.size(); ++i) {
    for (Natural n : eps[i].first(cap)) out.push_back({i, n});
    auto card = eps[i].cardinality();
    if (truncated && (!card || *card > cap)) *truncated = true;
  }
  return out;
}

std::vector<EdgeRef> Ultragraph::out_edges_all(const EPSet& a) const {
  if (epsilon_is_infinite(a)) throw PreconditionViolated("infinitely many edges leave the given set");
  auto eps = epsilon(a);
  std::vector<EdgeRef> out;
  for (std::uint32_t i = 0; i < eps.size(); ++i)
    for (Natural n : eps[i].enumerate_up_to(eps[i].threshold())) out.push_back({i, n});
  return out;
}

std::vector<EPSet> Ultragraph::edges_into(Natural v) const {
  std::vector<EPSet> out;
  const EPSet target = EPSet::singleton(v);
  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& dom = pres_.schemas[i].domain;
    if (norm_[i].core.contains(v)) {
      out.push_back(dom);
      continue;
    }
    EPSet idx;
    for (const auto& f : norm_[i].moving) idx = idx.unite(preimage(target, f));
    out.push_back(idx.intersect(dom));
  }
  return out;
}

std::vector<EPSet> Ultragraph::edges_between(Natural v, Natural w) const {
  auto into = edges_into(w);
  auto from = epsilon(EPSet::singleton(v));
  for (std::size_t i = 0; i < into.size(); ++i) into[i] = into[i].intersect(from[i]);
  return into;
}

std::vector<EPSet> Ultragraph::edges_with_range_containing(const EPSet& s) const {
  std::vector<EPSet> out;
  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& dom = pres_.schemas[i].domain;
    EPSet rest = s.minus(norm_[i].core);
    if (rest.is_empty()) {
      out.push_back(dom);
      continue;
    }
    if (!rest.is_finite() || norm_[i].moving.empty()) {
      out.push_back(EPSet());
      continue;
    }
    EPSet idx = dom;
    for (Natural d : rest.enumerate_up_to(rest.threshold())) {
      EPSet hit;
      for (const auto& f : norm_[i].moving) hit = hit.unite(preimage(EPSet::singleton(d), f));
      idx = idx.intersect(hit);
    }
    out.push_back(idx);
  }
  return out;
}

std::vector<EPSet> Ultragraph::edges_with_range_meeting(const EPSet& s) const {
  std::vector<EPSet> out;
  for (std::size_t i = 0; i < pres_.schemas.size(); ++i) {
    const auto& dom = pres_.schemas[i].domain;
    if (norm_[i].core.intersects(s)) {
      out.push_back(dom);
      continue;
    }
    EPSet idx;
    for (const auto& f : norm_[i].moving) idx = idx.unite(preimage(s, f));
    out.push_back(idx.intersect(dom));
  }
  return out;
}

EPSet Ultragraph::sources_of(const std::vector<EPSet>& indices) const {
  EPSet out;
  for (std::size_t i = 0; i < indices.size() && i < pres_.schemas.size(); ++i) {
    EPSet idx = indices[i].intersect(pres_.schemas[i].domain);
    if (!idx.is_empty()) out = out.unite(image(idx, pres_.schemas[i].source));
  }
  return out;
}

bool Ultragraph::is_infinite_emitter_vertex(Natural v) const {
  return std::binary_search(ie_vertices_.begin(), ie_vertices_.end(), v);
}

std::vector<GeneralizedVertex> Ultragraph::minimal_infinite_emitters() const {
  std::vector<GeneralizedVertex> out;
  for (std::size_t k = 0; k < mies_.size(); ++k) out.push_back(mie(static_cast<int>(k)));
  return out;
}

GeneralizedVertex Ultragraph::mie(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= mies_.size())
    throw UndefinedError("no minimal infinite emitter " + mie_name(id));
  return {mies_[id], {id}, EPSet()};
}

std::optional<int> Ultragraph::mie_id(const EPSet& set) const {
  auto it = std::lower_bound(mies_.begin(), mies_.end(), set);
  if (it == mies_.end() || *it != set) return std::nullopt;
  return static_cast<int>(it - mies_.begin());
}

std::vector<int> Ultragraph::mies_within(const EPSet& b) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < mies_.size(); ++k)
    if (mies_[k].is_subset_of(b)) out.push_back(static_cast<int>(k));
  return out;
}

std::optional<GeneralizedVertex> Ultragraph::decompose(const EPSet& b) const {
  if (b.is_empty() || !b.is_subset_of(pres_.universe)) return std::nullopt;
  GeneralizedVertex out{b, mies_within(b), b};
  for (int k : out.mies) out.finite_part = out.finite_part.minus(mies_[k]);
  if (!out.finite_part.is_finite()) return std::nullopt;
  return out;
}

GeneralizedVertex Ultragraph::gv(const EPSet& b) const {
  auto d = decompose(b);
  if (!d) throw ValidationError(b.to_string() + " is not a generalized vertex");
  return *d;
}

std::vector<Diagnostic> rfum_check(const Ultragraph& g) {
  std::vector<Diagnostic> out;
  auto fails = [&](const EPSet& r) {
    EPSet rest = r;
    for (int k : g.mies_within(r)) rest = rest.minus(g.mie_sets()[k]);
    return !rest.is_finite();
  };
  for (std::uint32_t i = 0; i < g.schema_count(); ++i) {
    const auto& dom = g.schema(i).domain;
    if (dom.is_empty()) continue;
    if (!dom.is_finite()) {
      if (fails(g.core(i))) {
        EdgeRef e{i, *dom.min()};
        out.push_back({Diagnostic::Kind::RfumViolation,
                       "range of " + g.edge_name(e) + " is not a finite union of emitters and vertices",
                       std::nullopt, e});
      }
      continue;
    }
    for (Natural n : dom.enumerate_up_to(dom.threshold())) {
      EdgeRef e{i, n};
      if (fails(g.range(e))) {
        out.push_back({Diagnostic::Kind::RfumViolation,
                       "range of " + g.edge_name(e) + " is not a finite union of emitters and vertices",
                       std::nullopt, e});
        break;
      }
    }
  }
  return out;
}

}  // namespace ugk
