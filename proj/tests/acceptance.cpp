// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "ugk/conditions.hpp"
#include "ugk/constructions.hpp"
#include "ugk/dsl.hpp"
#include "ugk/errors.hpp"
#include "ugk/expr.hpp"
#include "ugk/oracle.hpp"

using namespace ugk;

namespace {

const char* const kGood[] = {"paper_example", "kwinf_a", "kwinf_b", "kwinf_c", "exit_loop"};
const char* const kAll[] = {"paper_example", "kwinf_a",        "kwinf_b",        "kwinf_c",
                            "exit_loop",     "no_exit_loop",   "wandering",      "degenerate_ie1",
                            "degenerate_ie2", "degenerate_v1", "degenerate_v2", "degenerate_v3"};

Ultragraph fixture(const std::string& name) {
  return Ultragraph(load_presentation(std::string(UGK_FIXTURES) + "/" + name + ".ug"));
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t passed = 0;

  void expect(bool ok, const std::string& what) {
    if (ok)
      ++passed;
    else
      failures.push_back(what);
  }
};

// AC1 --------------------------------------------------------------------

void ac1(Check& c) {
  const auto t0 = Clock::now();
  Ultragraph g = fixture("paper_example");
  c.expect(g.validate().empty(), "RFUM ok");
  const auto& mies = g.mie_sets();
  c.expect(mies.size() == 1, "exactly one minimal infinite emitter");
  if (!mies.empty()) {
    EdgeRef e1{*g.find_schema("e1"), 0}, e2{*g.find_schema("e2"), 0};
    c.expect(mies[0] == EPSet::progression(3, 1), "emitter is {i : i >= 3}, got " + mies[0].to_string());
    c.expect(mies[0] == g.range(e1).intersect(g.range(e2)), "emitter is r(e1) meet r(e2)");
  }
  c.expect(check_K(g, 8).verdict == Verdict::Holds, "K holds at bound 8");
  c.expect(check_infty(g, 8).verdict == Verdict::Holds, "INF holds at bound 8");
  c.expect(check_W(g, 10).verdict == Verdict::Holds, "W holds at bound 10");
  c.expect(seconds_since(t0) < 10.0, "under 10 s");
}

// AC2 --------------------------------------------------------------------

void ac2(Check& c) {
  for (const char* name : {"paper_example", "kwinf_a", "kwinf_c"}) {
    Ultragraph g = fixture(name);
    const std::string tag = std::string(name) + ": ";
    ClopenSet all(Cylinder::whole(g));
    auto t0 = Clock::now();
    try {
      Witness f3 = f3_witness(g, all);
      c.expect(order(g, f3.element, 10) == 3u, tag + "f3 has order 3");
      c.expect(f3.element.support(g).is_subset_of(g, all), tag + "f3 support inside A");
    } catch (const Error& e) {
      c.expect(false, tag + "f3 threw " + e.what());
    }
    c.expect(seconds_since(t0) < 5.0, tag + "f3 under 5 s");

    // A proper clopen part as well as the whole space.
    const EdgeRef e = g.out_edges(g.vertices(), 1).front();
    Cylinder around(g, {e}, g.range(e));
    BoundaryPoint x = witness(g, around);
    for (const ClopenSet& a : {all, ClopenSet(around)}) {
      t0 = Clock::now();
      try {
        Witness f1 = f1_witness(g, x, a);
        const ClopenSet supp = f1.element.support(g);
        c.expect(!f1.element.is_identity() && compose(g, f1.element, f1.element).is_identity(),
                 tag + "f1 is an involution");
        c.expect(supp.contains(g, x), tag + "x in supp(f1)");
        c.expect(supp.is_subset_of(g, a), tag + "supp(f1) inside A");
      } catch (const Error& e) {
        c.expect(false, tag + "f1 threw " + e.what());
      }
      c.expect(seconds_since(t0) < 5.0, tag + "f1 under 5 s");
    }
  }
}

// AC3 --------------------------------------------------------------------

void ac3(Check& c) {
  const auto t0 = Clock::now();
  std::uint64_t seed = 1000;
  std::size_t checks = 0;
  for (const char* name : kAll) {
    Ultragraph g = fixture(name);
    auto r = oracle::diff_test(g, seed++, 1000);
    c.expect(r.trials == 1000, std::string(name) + ": ran 1000 trials");
    checks += r.checks;
    c.expect(r.divergences == 0, std::string(name) + ": " + std::to_string(r.divergences) + " divergences" +
                                     (r.samples.empty() ? "" : ", e.g. " + r.samples.front()));
  }
  c.expect(seconds_since(t0) < 60.0, "under 60 s");
}


/// Paths of length one and two over the first few edges.
std::vector<Path> short_paths(const Ultragraph& g) {
  std::vector<Path> out;
  for (const auto& e : g.out_edges(g.vertices(), 4)) {
    out.push_back({e});
    for (const auto& f : g.out_edges(g.range(e), 3)) out.push_back({e, f});
  }
  return out;
}

// AC4 --------------------------------------------------------------------

void ac4(Check& c) {
  const auto t0 = Clock::now();
  for (const char* name : kGood) {
    Ultragraph g = fixture(name);
    const std::string tag = std::string(name) + ": ";
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      FullGroupElement a = random_element(g, 3 * i), b = random_element(g, 3 * i + 1),
                       d = random_element(g, 3 * i + 2);
      if (!equals(g, compose(g, compose(g, a, b), d), compose(g, a, compose(g, b, d)))) ++bad;
      if (!equals(g, compose(g, FullGroupElement::identity(), a), a) ||
          !equals(g, compose(g, a, FullGroupElement::identity()), a))
        ++bad;
      if (!compose(g, a, inverse(a)).is_identity() || !compose(g, inverse(a), a).is_identity()) ++bad;
    }
    c.expect(bad == 0, tag + std::to_string(bad) + " failed group laws");

    std::mt19937_64 rng(77);
    const auto paths = short_paths(g);
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::size_t involutions = 0;
    for (int tries = 0; tries < 2000 && involutions < 200; ++tries) {
      const Path& p = paths[pick(rng)];
      const Path& q = paths[pick(rng)];
      if (is_prefix(p, q) || is_prefix(q, p)) continue;
      EPSet s = g.range(p.back()).intersect(g.range(q.back()));
      if (s.is_empty() || !g.decompose(s)) continue;
      FullGroupElement h = pi_hat(g, {make_bisection(g, p, q, s)});
      ++involutions;
      c.expect(!h.is_identity() && compose(g, h, h).is_identity(),
               tag + "pi_hat square for " + path_to_string(g, p) + ", " + path_to_string(g, q));
    }
    c.expect(involutions > 0, tag + "built some pi_hat involutions");
  }
  c.expect(seconds_since(t0) < 60.0, "under 60 s");
}

// AC5 --------------------------------------------------------------------

void ac5(Check& c) {
  Ultragraph closed = fixture("no_exit_loop"), open = fixture("exit_loop");
  BoundaryPoint x = parse_point(closed, "evp(; l)"), y = parse_point(open, "evp(; l)");
  c.expect(is_isolated(closed, x).isolated, "loop point isolated without an exit");
  c.expect(effectiveness_report(closed, 8).verdict == Verdict::Fails, "not effective without an exit");
  c.expect(!is_isolated(open, y).isolated, "loop point not isolated with an exit");
  c.expect(effectiveness_report(open, 8).verdict == Verdict::Holds, "effective with an exit");
}

// AC6 --------------------------------------------------------------------

Cylinder shift_all(const Ultragraph& g, Cylinder c) {
  while (!c.prefix().empty()) c = shift_image(g, c);
  return c;
}

void ac6(Check& c) {
  std::size_t perturbed = 0;
  for (const char* name : kGood) {
    Ultragraph g = fixture(name);
    const std::string tag = std::string(name) + ": ";
    const auto paths = short_paths(g);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::size_t pairs = 0;
    for (int tries = 0; tries < 5000 && pairs < 100; ++tries) {
      const Path& alpha = paths[pick(rng)];
      const Path& beta = paths[pick(rng)];
      const EPSet rb = g.range(beta.back());
      const EPSet common = g.range(alpha.back()).intersect(rb);
      if (common.is_empty()) continue;
      EPSet a = common;
      if (rng() % 2 || !g.decompose(a)) {
        auto small = common.enumerate_up_to(g.window() + 8);
        if (small.empty()) continue;
        a = EPSet::singleton(small[rng() % small.size()]);
      }
      ++pairs;
      const ClopenSet lhs(shift_all(g, Cylinder(g, alpha, a)));
      c.expect(lhs.equals(g, ClopenSet(shift_all(g, Cylinder(g, beta, a)))),
               tag + "equal images for " + path_to_string(g, alpha) + ", " + path_to_string(g, beta));

      for (Natural v : rb.minus(a).enumerate_up_to(g.window() + 8)) {
        if (g.out_edges(EPSet::singleton(v), 1).empty() && g.mies_within(EPSet::singleton(v)).empty()) continue;
        const EPSet b = a.unite(EPSet::singleton(v));
        if (!g.decompose(b)) continue;
        const ClopenSet rhs(shift_all(g, Cylinder(g, beta, b)));
        auto gamma = rhs.distinguishing_point(g, lhs);
        ++perturbed;
        c.expect(!rhs.equals(g, lhs) && gamma && rhs.contains(g, *gamma) && !lhs.contains(g, *gamma) &&
                     Cylinder(g, {}, EPSet::singleton(v)).contains(g, *gamma),
                 tag + "perturbation by vertex " + std::to_string(v));
        break;
      }
    }
    c.expect(pairs == 100, tag + "only " + std::to_string(pairs) + " pairs");
  }
  c.expect(perturbed > 0, "some pair admits a perturbation");
}

// AC7 --------------------------------------------------------------------

bool mies_agree(const Ultragraph& g) {
  std::vector<oracle::Mask> lib;
  for (const auto& m : g.mie_sets()) lib.push_back(oracle::truncate(m, 40));
  std::sort(lib.begin(), lib.end());
  return oracle::lattice_mies(oracle::materialize(g, 40)) == lib;
}

void ac7(Check& c) {
  for (const char* name : kAll) c.expect(mies_agree(fixture(name)), std::string(name) + ": emitters differ");
  std::mt19937_64 rng(40);
  std::size_t random = 0;
  for (int tries = 0; tries < 200 && random < 20; ++tries) {
    Ultragraph g(oracle::random_presentation(rng));
    if (!g.is_valid()) continue;
    ++random;
    c.expect(mies_agree(g), "random presentation " + std::to_string(random) + ": emitters differ\n" +
                                print_presentation(g.presentation()));
  }
  c.expect(random == 20, "only " + std::to_string(random) + " valid random presentations");
}

// AC8 --------------------------------------------------------------------

void ac8(Check& c) {
  const std::pair<const char*, const char*> degenerate[] = {{"degenerate_ie1", "fin(; mie#0)"},
                                                            {"degenerate_ie2", "fin(; mie#0)"},
                                                            {"degenerate_v1", "evp(; e)"},
                                                            {"degenerate_v2", "evp(; e)"},
                                                            {"degenerate_v3", "evp(; e.f)"}};
  for (const auto& [name, point] : degenerate) {
    Ultragraph g = fixture(name);
    c.expect(check_ND(g).verdict == Verdict::Fails, std::string(name) + ": ND fails");
    const auto n = orbit_enumerate(g, parse_point(g, point), 6).size();
    c.expect(n == 1 || n == 2, std::string(name) + ": orbit of " + point + " has " + std::to_string(n) + " points");
  }
  for (const char* name : kGood) {
    Ultragraph g = fixture(name);
    if (check_ND(g).verdict != Verdict::Holds) continue;
    const bool kwinf = std::string(name) != "exit_loop";
    for (const auto& x : oracle::point_enum(g, oracle::materialize(g, 16), 3, 4, 12)) {
      const auto n = orbit_enumerate(g, x, 6).size();
      c.expect(n >= 3, std::string(name) + ": orbit of " + point_to_string(g, x) + " has " + std::to_string(n));
      if (kwinf) {
        const auto m = orbit_enumerate(g, x, 10).size();
        c.expect(m >= 10, std::string(name) + ": budget-10 orbit of " + point_to_string(g, x) + " has " +
                              std::to_string(m));
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::pair<const char*, void (*)(Check&)> criteria[] = {{"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3},
                                                               {"AC4", ac4}, {"AC5", ac5}, {"AC6", ac6},
                                                               {"AC7", ac7}, {"AC8", ac8}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    if (argc > 1 && std::find(argv + 1, argv + argc, std::string(id)) == argv + argc) continue;
    Check c;
    const auto t0 = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("threw: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << id << (ok ? " PASS " : " FAIL ") << c.passed << " checks, " << timing << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
