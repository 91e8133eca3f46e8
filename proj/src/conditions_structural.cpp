#include <optional>

#include "ugk/conditions.hpp"
#include "ugk/errors.hpp"

namespace ugk {

namespace {

std::optional<std::vector<EdgeRef>> few_edges_into(const Ultragraph& g, Natural v, std::size_t max) {
  auto into = g.edges_into(v);
  std::vector<EdgeRef> out;
  for (std::uint32_t s = 0; s < into.size(); ++s) {
    auto n = into[s].cardinality();
    if (!n || out.size() + *n > max) return std::nullopt;
    for (Natural i : into[s].enumerate_up_to(into[s].threshold())) out.push_back({s, i});
  }
  return out;
}

bool is_source(const Ultragraph& g, Natural v) { return !g.non_sources().contains(v); }

/// Indices n with f(n) > h(n), for affine f and h.
EPSet indices_where_greater(const Affine& f, const Affine& h) {
  const std::int64_t slope = static_cast<std::int64_t>(f.coef) - static_cast<std::int64_t>(h.coef);
  const std::int64_t gap = f.offset - h.offset;
  if (slope == 0) return gap > 0 ? EPSet::all() : EPSet();
  if (slope > 0) {
    if (gap > 0) return EPSet::all();
    return EPSet::progression(static_cast<Natural>(-gap / slope + 1), 1);
  }
  if (gap <= 0) return EPSet();
  return EPSet::interval(0, static_cast<Natural>((gap + (-slope) - 1) / (-slope)));
}

}  // namespace

std::vector<DegenerateObject> degenerate_catalog(const Ultragraph& g) {
  std::vector<DegenerateObject> out;
  for (std::size_t k = 0; k < g.mie_sets().size(); ++k) {
    const std::string name = Ultragraph::mie_name(static_cast<int>(k));
    EPSet ns = g.mie_sets()[k].intersect(g.non_sources());
    if (ns.is_empty()) {
      out.push_back({"IE1", name + " consists of sources"});
      continue;
    }
    if (ns.cardinality() != 1u) continue;
    Natural v = *ns.min();
    auto in = few_edges_into(g, v, 1);
    if (in && in->size() == 1 && is_source(g, g.source((*in)[0])))
      out.push_back({"IE2", name + " has the single non-source " + std::to_string(v) + " fed by " +
                                g.edge_name((*in)[0]) + " from a source"});
  }
  for (Natural v : g.window_vertices()) {
    auto in = few_edges_into(g, v, 2);
    if (!in) continue;
    const std::string vs = std::to_string(v);
    if (in->size() == 1 && g.source((*in)[0]) == v) {
      out.push_back({"V1", "vertex " + vs + " is entered only by its loop " + g.edge_name((*in)[0])});
      continue;
    }
    if (in->size() == 2) {
      for (int i = 0; i < 2; ++i) {
        EdgeRef e = (*in)[i], f = (*in)[1 - i];
        if (g.source(e) == v && is_source(g, g.source(f))) {
          out.push_back({"V2", "vertex " + vs + " is entered by its loop " + g.edge_name(e) + " and by " +
                                   g.edge_name(f) + " from a source"});
          break;
        }
      }
      continue;
    }
    if (in->size() == 1) {
      EdgeRef f = (*in)[0];
      Natural w = g.source(f);
      auto back = few_edges_into(g, w, 1);
      if (w > v && back && back->size() == 1 && g.source((*back)[0]) == v)
        out.push_back({"V3", "vertices " + vs + " and " + std::to_string(w) + " only feed each other via " +
                                 g.edge_name(f) + " and " + g.edge_name((*back)[0])});
    }
  }
  return out;
}

ConditionReport check_ND(const Ultragraph& g) {
  auto cat = degenerate_catalog(g);
  if (cat.empty())
    return {"ND", Verdict::Holds, 0, "no degenerate emitter and no degenerate vertex below " + std::to_string(g.window())};
  return {"ND", Verdict::Fails, 0, cat.front().tag + ": " + cat.front().description};
}

ConditionReport check_infty(const Ultragraph& g, std::size_t bound) {
  std::string unknown;
  for (std::size_t k = 0; k < g.mie_sets().size(); ++k) {
    const EPSet& a = g.mie_sets()[k];
    const std::string name = Ultragraph::mie_name(static_cast<int>(k));
    const auto eps = g.epsilon(a);
    EPSet back = g.sources_of(g.edges_with_range_containing(a)).intersect(g.vertices());
    bool held = false, exact = false;
    std::string how;
    for (std::size_t iter = 0; iter <= bound && !held; ++iter) {
      auto meeting = g.edges_with_range_meeting(back);
      for (std::uint32_t s = 0; s < eps.size() && !held; ++s) {
        EPSet good = eps[s].intersect(meeting[s]);
        if (!good.is_finite()) {
          held = true;
          how = "infinitely many edges of " + g.schema(s).name + " return";
          break;
        }
        const Affine& src = g.schema(s).source;
        if (src.coef == 0 || eps[s].is_finite()) continue;
        for (const auto& t : g.moving_terms(s)) {
          const std::int64_t a_coef = static_cast<std::int64_t>(src.coef);
          if (t.coef != src.coef || (src.offset - t.offset) % a_coef != 0) continue;
          const std::int64_t shift = (src.offset - t.offset) / a_coef;
          if (shift <= 0) continue;
          for (Natural m : good.first(16)) {
            EPSet chain = EPSet::progression(m, static_cast<Natural>(shift));
            if (chain.is_subset_of(g.schema(s).domain) && !chain.intersect(eps[s]).is_finite()) {
              held = true;
              how = "edges " + g.schema(s).name + "[n] return through " + g.schema(s).name + "[n-" +
                    std::to_string(shift) + "] from " + g.edge_name({s, m});
              break;
            }
          }
          if (held) break;
        }
      }
      if (held) break;
      EPSet next = back.unite(g.sources_of(meeting)).intersect(g.vertices());
      if (next == back) {
        exact = true;
        break;
      }
      back = next;
    }
    if (held) continue;
    if (exact) return {"INF", Verdict::Fails, bound, "only finitely many edges leaving " + name + " return to it"};
    if (unknown.empty()) unknown = "return search for " + name + " did not settle";
  }
  if (!unknown.empty()) return {"INF", Verdict::Unknown, bound, unknown};
  return {"INF", Verdict::Holds, bound, "every minimal infinite emitter has infinitely many returning edges"};
}

ConditionReport check_W(const Ultragraph& g, std::size_t bound) {
  std::vector<EPSet> upward;
  for (std::uint32_t s = 0; s < g.schema_count(); ++s) {
    const auto& sch = g.schema(s);
    EPSet idx;
    const EPSet& core = g.core(s);
    if (!core.is_finite())
      idx = sch.domain;
    else if (!core.is_empty())
      idx = indices_where_greater({0, static_cast<std::int64_t>(*core.max())}, sch.source);
    for (const auto& t : g.moving_terms(s)) idx = idx.unite(indices_where_greater(t, sch.source));
    upward.push_back(idx.intersect(sch.domain));
  }
  EPSet climbers = g.sources_of(upward);
  if (climbers.is_finite())
    return {"W", Verdict::Holds, bound,
            "edges reaching a larger vertex start in " + climbers.to_string() + ", so no path wanders"};
  return {"W", Verdict::Unknown, bound, "edges reaching a larger vertex start in the infinite set " +
                                            climbers.to_string()};
}

ConditionReport run_condition(const Ultragraph& g, const std::string& name, std::size_t bound) {
  if (name == "L") return check_L(g, bound);
  if (name == "K") return check_K(g, bound);
  if (name == "T") return check_T(g, bound);
  if (name == "ND") return check_ND(g);
  if (name == "INF") return check_infty(g, bound);
  if (name == "W") return check_W(g, bound);
  throw PreconditionViolated("unknown condition " + name);
}

}  // namespace ugk
