#include <map>

#include "search.hpp"
#include "ugk/conditions.hpp"
#include "ugk/constructions.hpp"
#include "ugk/errors.hpp"
#include "ugk/oracle.hpp"

namespace ugk {

namespace {

void require_conditions(const Ultragraph& g, std::size_t bound, std::vector<std::string>& notes) {
  for (const char* c : {"K", "W", "INF"}) {
    auto r = run_condition(g, c, bound);
    if (r.verdict == Verdict::Fails) throw PreconditionViolated("condition " + r.condition + " fails: " + r.certificate);
    if (r.verdict == Verdict::Unknown) notes.push_back("condition " + r.condition + " unsettled at bound " +
                                                       std::to_string(bound));
  }
}

/// A path g with D(g, r(g)) inside c, longer than the prefix of c and at
/// least min_len long.
Path sub_path(const Ultragraph& g, const Cylinder& c, std::size_t min_len) {
  Path p = c.prefix();
  bool stepped = false;
  for (const auto& e : g.out_edges(c.set(), c.excluded().size() + 1))
    if (!c.excluded().count(e)) {
      p.push_back(e);
      stepped = true;
      break;
    }
  if (!stepped) throw WitnessNotFound("cylinder " + c.to_string(g) + " has no free edge");
  while (p.size() < min_len) p.push_back(g.out_edges(g.range(p.back()), 1).front());
  return p;
}

std::string rows_to_string(const Ultragraph& g, const CompactBisection& v) {
  std::string s;
  for (const auto& z : v) s += (s.empty() ? "" : ", ") + to_string(g, z);
  return s;
}

Witness assemble(const Ultragraph& g, const CompactBisection& v, const CompactBisection& w,
                 std::vector<std::string> notes) {
  Witness out;
  out.element = commutator(g, pi_hat(g, v), pi_hat(g, w));
  out.word = "let V = pi_hat(" + rows_to_string(g, v) + ")\nlet W = pi_hat(" + rows_to_string(g, w) +
             ")\nlet w = [V, W]\n";
  out.notes = std::move(notes);
  return out;
}

void finish(Witness& w) {
  for (const auto& [k, v] : w.verification.items())
    if (v.is_boolean() && !v.get<bool>()) throw WitnessNotFound("construction failed its check " + k);
}

/// Paths from `start` grouped by the small vertices their last range hits.
std::map<Natural, std::vector<Path>> by_target(const Ultragraph& g, const std::vector<Path>& paths) {
  std::map<Natural, std::vector<Path>> out;
  for (const auto& p : paths)
    for (Natural w : g.range(p.back()).enumerate_up_to(g.window())) out[w].push_back(p);
  return out;
}

}  // namespace

Witness f3_witness(const Ultragraph& g, const ClopenSet& a, std::size_t bound) {
  std::vector<std::string> notes;
  require_conditions(g, bound, notes);
  ClopenSet na = a.normalized(g);
  if (na.parts().empty()) throw PreconditionViolated("empty clopen set");
  const Path beta = sub_path(g, na.parts().front(), 0);
  notes.push_back("shrunk to D(" + path_to_string(g, beta) + ", r)");
  for (const auto& [w, ps] : by_target(g, detail::bfs_paths(g, g.range(beta.back()), {}, bound))) {
    const EPSet c = EPSet::singleton(w);
    std::vector<Ultrapath> cands, chosen;
    for (const auto& p : ps) cands.push_back({concat(beta, p), c});
    if (!detail::pick_disjoint(g, cands, chosen, 3)) continue;
    notes.push_back("common range normalized to {" + std::to_string(w) + "}");
    Witness out = assemble(g, {make_bisection(g, chosen[0].path, chosen[1].path, c)},
                           {make_bisection(g, chosen[1].path, chosen[2].path, c)}, std::move(notes));
    auto ord = order(g, out.element, 6);
    out.verification["order"] = ord ? nlohmann::json(*ord) : nlohmann::json(nullptr);
    out.verification["order_is_3"] = ord == 3u;
    out.verification["support_in_A"] = out.element.support(g).is_subset_of(g, a);
    finish(out);
    return out;
  }
  throw WitnessNotFound("no three disjoint paths below " + path_to_string(g, beta) + " within bound " +
                        std::to_string(bound));
}

Witness f1_witness(const Ultragraph& g, const BoundaryPoint& x, const ClopenSet& a, std::size_t bound) {
  require_boundary_point(g, x);
  if (!a.contains(g, x)) throw PreconditionViolated(point_to_string(g, x) + " is not in the clopen set");
  std::vector<std::string> notes;
  require_conditions(g, bound, notes);
  const Cylinder* part = nullptr;
  for (const auto& c : a.parts())
    if (c.contains(g, x)) part = &c;
  Witness out;
  if (x.kind() == BoundaryPoint::Kind::Periodic) {
    const std::size_t n = part->prefix().size() + 1;
    FourPaths fp = four_disjoint_paths(g, x, n, bound);
    notes.push_back("periodic branch, m = " + std::to_string(n) + ", n = " + std::to_string(fp.m));
    const auto& p = fp.paths;
    out = assemble(g, {make_bisection(g, p[1], p[2], fp.set), make_bisection(g, p[3], p[0], fp.set)},
                   {make_bisection(g, p[1], p[3], fp.set)}, std::move(notes));
  } else {
    const Path& beta = x.head();
    const EPSet m = g.mie_sets()[x.mie()];
    EdgeSet f;
    if (beta.size() == part->prefix().size())
      for (const auto& e : part->excluded())
        if (m.contains(g.source(e))) f.insert(e);
    std::vector<Ultrapath> cands, chosen;
    for (const auto& p : detail::bfs_paths(g, m, f, bound))
      if (m.is_subset_of(g.range(p.back()))) cands.push_back({concat(beta, p), m});
    if (!detail::pick_disjoint(g, cands, chosen, 3))
      throw WitnessNotFound("no three disjoint returns to " + Ultragraph::mie_name(x.mie()) + " within bound " +
                            std::to_string(bound));
    EdgeSet h = f;
    for (const auto& u : chosen) h.insert(u.path[beta.size()]);
    notes.push_back("finite branch, excluded " + std::to_string(h.size()) + " edges");
    out = assemble(g,
                   {make_bisection(g, chosen[0].path, beta, m, h),
                    make_bisection(g, chosen[1].path, chosen[2].path, m, h)},
                   {make_bisection(g, chosen[0].path, chosen[1].path, m, h)}, std::move(notes));
  }
  out.verification["nontrivial"] = !out.element.is_identity();
  out.verification["involution"] = compose(g, out.element, out.element).is_identity();
  out.verification["moves_x"] = !(out.element.apply(g, x) == x);
  out.verification["x_in_support"] = out.element.support(g).contains(g, x);
  out.verification["support_in_A"] = out.element.support(g).is_subset_of(g, a);
  finish(out);
  return out;
}

Witness f2_witness(const Ultragraph& g, const FullGroupElement& tau, const ClopenSet& a, std::size_t bound) {
  if (tau.is_identity() || !compose(g, tau, tau).is_identity())
    throw PreconditionViolated("expected a nontrivial involution");
  const ClopenSet supp = tau.support(g);
  if (a.is_empty(g) || !a.is_subset_of(g, supp)) throw PreconditionViolated("clopen set must be a nonempty part of the support");
  std::vector<std::string> notes;
  require_conditions(g, bound, notes);
  for (const auto& row : tau.rows()) {
    if (row.alpha == row.beta) continue;
    ClopenSet inside = a.intersect(g, ClopenSet(source(g, row))).normalized(g);
    for (const auto& part : inside.parts()) {
      const Path gamma = sub_path(g, part, row.beta.size() + 1);
      const Path rho(gamma.begin() + static_cast<std::ptrdiff_t>(row.beta.size()), gamma.end());
      const Path br = concat(row.beta, rho), ar = concat(row.alpha, rho);
      for (const auto& [w, ps] : by_target(g, detail::bfs_paths(g, g.range(gamma.back()), {}, bound, 400))) {
        const EPSet c = EPSet::singleton(w);
        for (std::size_t i = 0; i < ps.size() && i < 40; ++i)
          for (std::size_t j = i + 1; j < ps.size() && j < 40; ++j) {
            std::vector<Ultrapath> four{{concat(br, ps[i]), c}, {concat(br, ps[j]), c},
                                        {concat(ar, ps[i]), c}, {concat(ar, ps[j]), c}};
            bool ok = true;
            for (std::size_t s = 0; s < 4 && ok; ++s)
              for (std::size_t t = s + 1; t < 4 && ok; ++t) ok = disjoint(g, four[s], four[t]);
            if (!ok) continue;
            notes.push_back("inside " + to_string(g, row) + " via rho = " + path_to_string(g, rho));
            Witness out = assemble(g,
                                   {make_bisection(g, four[0].path, four[1].path, c),
                                    make_bisection(g, four[2].path, four[3].path, c)},
                                   {make_bisection(g, four[2].path, four[0].path, c)}, std::move(notes));
            out.verification["nontrivial"] = !out.element.is_identity();
            out.verification["support_in_A_and_image"] =
                out.element.support(g).is_subset_of(g, a.unite(g, tau.image(g, a)));
            auto t = oracle::materialize(g, 64);
            std::size_t checked = 0;
            bool agrees = true;
            const ClopenSet psupp = out.element.support(g);
            for (const auto& x : oracle::point_enum(g, t, 6)) {
              if (!psupp.contains(g, x)) continue;
              ++checked;
              agrees = agrees && out.element.apply(g, x) == tau.apply(g, x);
            }
            for (const auto& z : out.element.rows()) {
              BoundaryPoint x = witness(g, source(g, z));
              ++checked;
              agrees = agrees && out.element.apply(g, x) == tau.apply(g, x);
            }
            out.verification["points_checked"] = checked;
            out.verification["agrees_with_tau"] = agrees;
            finish(out);
            return out;
          }
      }
    }
  }
  throw WitnessNotFound("no disjoint pair of paths inside the clopen set within bound " + std::to_string(bound));
}

}  // namespace ugk
