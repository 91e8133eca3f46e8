#include <algorithm>

#include "ugk/errors.hpp"
#include "ugk/oracle.hpp"

namespace ugk::oracle {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return n == 0 ? 0 : rng() % n; }

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

EPSet random_set_in(const EPSet& base, std::mt19937_64& rng) {
  std::vector<Natural> vs = base.enumerate_up_to(12);
  std::vector<Natural> pick;
  for (Natural v : vs)
    if (coin(rng, 0.4)) pick.push_back(v);
  if (pick.empty() && !vs.empty()) pick.push_back(vs[below(rng, vs.size())]);
  return EPSet::finite(pick);
}

EPSet random_ep(std::mt19937_64& rng) {
  EPSet s;
  if (coin(rng, 0.7)) s = EPSet::progression(below(rng, 5), 1 + below(rng, 2));
  std::size_t extra = below(rng, 4);
  for (std::size_t i = 0; i < extra; ++i) s = s.unite(EPSet::singleton(below(rng, 8)));
  if (s.is_empty()) s = EPSet::singleton(below(rng, 6));
  return s;
}

Cylinder cylinder_with_prefix(const Ultragraph& g, const Path& prefix, std::mt19937_64& rng) {
  EPSet base = prefix.empty() ? g.vertices() : g.range(prefix.back());
  auto d = g.decompose(base);
  EPSet set = base;
  if (d) {
    switch (below(rng, 4)) {
      case 0:
        break;
      case 1:
        if (!d->mies.empty()) {
          set = g.mie_sets()[d->mies[below(rng, d->mies.size())]];
          if (coin(rng, 0.5)) set = set.unite(random_set_in(d->finite_part, rng));
        }
        break;
      case 2:
        set = random_set_in(base, rng);
        break;
      default:
        set = d->finite_part;
        for (int k : d->mies)
          if (coin(rng, 0.5)) set = set.unite(g.mie_sets()[k]);
        break;
    }
  }
  if (!d) {
    set = random_set_in(base, rng);
    for (int k : g.mies_within(base))
      if (coin(rng, 0.5)) set = set.unite(g.mie_sets()[k]);
  }
  if (set.is_empty() || !g.decompose(set)) set = d ? base : EPSet::singleton(*base.min());
  EdgeSet f;
  for (const auto& e : g.out_edges(set, 4))
    if (coin(rng, 0.3)) f.insert(e);
  return Cylinder(g, prefix, set, f);
}

Path random_walk(const Ultragraph& g, const TruncatedGraph& t, std::size_t len, std::mt19937_64& rng) {
  Path p;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<EdgeRef> next;
    for (const auto& e : t.edges)
      if (e.ref.index < 8 && (p.empty() || g.range(p.back()).contains(e.source))) next.push_back(e.ref);
    if (next.empty()) break;
    p.push_back(next[below(rng, next.size())]);
  }
  return p;
}

}  // namespace

Cylinder random_cylinder(const Ultragraph& g, const TruncatedGraph& t, std::mt19937_64& rng) {
  return cylinder_with_prefix(g, random_walk(g, t, below(rng, 3), rng), rng);
}

Presentation random_presentation(std::mt19937_64& rng) {
  for (;;) {
    Presentation p;
    p.universe = EPSet::all();
    EdgeSchema step;
    step.name = "s";
    step.family = true;
    step.domain = EPSet::all();
    step.source = {1, 0};
    switch (below(rng, 3)) {
      case 0: step.range_terms.push_back({1, 1}); break;
      case 1: step.range_terms.push_back({1, 0}); break;
      default: step.range_terms.push_back({0, static_cast<std::int64_t>(below(rng, 3))}); break;
    }
    p.schemas.push_back(step);
    std::size_t extra = 1 + below(rng, 3);
    for (std::size_t i = 0; i < extra; ++i) {
      EdgeSchema e;
      e.name = "x" + std::to_string(i);
      e.family = coin(rng, 0.6);
      e.domain = e.family ? random_ep(rng) : EPSet::singleton(0);
      e.source = coin(rng, 0.5) || !e.family ? Affine{0, static_cast<std::int64_t>(below(rng, 5))}
                                             : Affine{1, static_cast<std::int64_t>(below(rng, 3))};
      if (e.family && coin(rng, 0.5)) e.range_terms.push_back({1, static_cast<std::int64_t>(below(rng, 3))});
      if (e.range_terms.empty() || coin(rng, 0.5)) e.range_const = random_ep(rng);
      p.schemas.push_back(e);
    }
    try {
      Ultragraph g(p);
      if (g.validate().empty()) return p;
    } catch (const BudgetExceeded&) {
    }
  }
}

DiffReport diff_test(const Ultragraph& g, std::uint64_t seed, std::size_t trials, Natural truncate_at) {
  std::mt19937_64 rng(seed);
  TruncatedGraph t = materialize(g, truncate_at);
  std::vector<BoundaryPoint> pts = point_enum(g, t);
  DiffReport rep;
  auto diverge = [&](const std::string& what, const Cylinder& a, const Cylinder& b, const BoundaryPoint* x) {
    ++rep.divergences;
    if (rep.samples.size() < 10)
      rep.samples.push_back(what + ": " + a.to_string(g) + " vs " + b.to_string(g) +
                            (x ? " at " + point_to_string(g, *x) : ""));
  };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++rep.trials;
    Cylinder a = random_cylinder(g, t, rng);
    Cylinder b = random_cylinder(g, t, rng);
    if (coin(rng, 0.4)) {
      Path p = a.prefix();
      if (coin(rng, 0.5)) {
        Path ext = random_walk(g, t, 1, rng);
        if (!ext.empty() && (p.empty() || g.range(p.back()).contains(g.source(ext[0])))) p.push_back(ext[0]);
      }
      b = cylinder_with_prefix(g, p, rng);
    }
    auto inter = intersect(g, a, b);
    auto diff = difference(g, a, b);
    std::optional<Cylinder> uni;
    if (a.prefix() == b.prefix()) uni = union_same_prefix(g, a, b);
    const ClopenSet normal = ClopenSet::from_cylinders(g, diff).normalized(g);
    for (const auto& x : pts) {
      bool ma = member(g, t, a, x), mb = member(g, t, b, x);
      ++rep.checks;
      if (ma != a.contains(g, x)) diverge("membership", a, a, &x);
      if ((inter && member(g, t, *inter, x)) != (ma && mb)) diverge("intersection", a, b, &x);
      std::size_t hits = 0;
      for (const auto& c : diff) hits += member(g, t, c, x) ? 1 : 0;
      if (hits != ((ma && !mb) ? 1u : 0u)) diverge("difference", a, b, &x);
      if (uni && member(g, t, *uni, x) != (ma || mb)) diverge("union", a, b, &x);
      bool in_normal = false;
      for (const auto& c : normal.parts()) in_normal |= member(g, t, c, x);
      if (in_normal != (ma && !mb)) diverge("normalized difference", a, b, &x);
    }
    if (a.is_empty(g)) {
      for (const auto& x : pts)
        if (member(g, t, a, x)) {
          diverge("emptiness", a, a, &x);
          break;
        }
    } else {
      try {
        BoundaryPoint w = witness(g, a);
        if (!member(g, t, a, w)) diverge("witness", a, a, &w);
      } catch (const WitnessNotFound&) {
        ++rep.unwitnessed;
      }
    }
  }
  return rep;
}

}  // namespace ugk::oracle
