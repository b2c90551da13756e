#include "coarsekit/witness_check.hpp"

#include <unordered_set>

namespace coarsekit {

namespace {

CheckResult fail(std::string why) { return {false, std::move(why)}; }

std::string show(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

CheckResult verify_tower_witness(const TowerWitness& wit, const Window& w) {
  const auto& sp = w.space();
  if (wit.levels < 1) return fail("levels must be >= 1");
  if (wit.towers.empty()) return fail("no towers");
  if (wit.bounds.size() != static_cast<std::size_t>(wit.levels - 1)) return fail("expected one bound per level j >= 2");
  for (std::size_t j = 0; j < wit.bounds.size(); ++j) {
    if (wit.bounds[j].lower > wit.bounds[j].upper) return fail("empty level interval");
    if (j > 0 && wit.bounds[j].lower <= wit.bounds[j - 1].lower) return fail("level lower bounds not strictly increasing");
  }
  std::unordered_set<Coords, CoordsHash> seen;
  for (const auto& t : wit.towers) {
    if (t.size() != static_cast<std::size_t>(wit.levels)) return fail("tower of wrong length");
    for (const auto& p : t) {
      if (!sp.contains(p)) return fail("point " + show(p) + " is not in the space");
      if (!seen.insert(p).second) return fail("point " + show(p) + " used twice");
    }
    for (std::size_t j = 1; j < t.size(); ++j) {
      const Distance d = sp.distance(t[0], t[j]);
      const auto& lb = wit.bounds[j - 1];
      if (d < lb.lower || d > lb.upper) {
        return fail("d" + show(t[0]) + show(t[j]) + " = " + std::to_string(d) + " outside [" +
                    std::to_string(lb.lower) + ", " + std::to_string(lb.upper) + "]");
      }
    }
  }
  return {};
}

CheckResult verify_pair_family(const PairFamilyWitness& wit, const Window& w) {
  const auto& sp = w.space();
  if (wit.families.empty()) return fail("no families");
  for (const auto& fam : wit.families) {
    if (fam.pairs.empty()) return fail("empty family at scale " + std::to_string(fam.scale));
    std::unordered_set<Coords, CoordsHash> seen;
    for (const auto& [x, y] : fam.pairs) {
      for (const auto* p : {&x, &y}) {
        if (!sp.contains(*p)) return fail("point " + show(*p) + " is not in the space");
        if (!seen.insert(*p).second) return fail("point " + show(*p) + " used twice");
      }
      const Distance d = sp.distance(x, y);
      if (d <= fam.scale || d > fam.bound) {
        return fail("d" + show(x) + show(y) + " = " + std::to_string(d) + " outside (" + std::to_string(fam.scale) +
                    ", " + std::to_string(fam.bound) + "]");
      }
    }
  }
  return {};
}

CheckResult verify_split_witness(const SplitWitness& wit, const Window& w) {
  const auto& sp = w.space();
  const Coords base = sp.basepoint();
  std::unordered_set<Coords, CoordsHash> a(wit.a.begin(), wit.a.end()), b(wit.b.begin(), wit.b.end());
  if (a.size() != wit.a.size() || b.size() != wit.b.size()) return fail("duplicate points");
  for (const auto& p : wit.a) {
    if (b.count(p)) return fail("A and B share " + show(p));
  }

  std::size_t expected = 0;
  for (const auto& pt : w.points()) {
    if (sp.distance(base, pt.coords) <= wit.rho) continue;
    ++expected;
    if (!a.count(pt.coords) && !b.count(pt.coords)) return fail("window point " + show(pt.coords) + " not covered");
  }
  if (a.size() + b.size() != expected) return fail("A and B contain points outside the punctured window");

  const auto touching = [&](const std::vector<Coords>& s) {
    for (const auto& p : s) {
      if (sp.distance(base, p) >= w.horizon() - wit.margin) return true;
    }
    return false;
  };
  if (!touching(wit.a)) return fail("A does not reach the horizon");
  if (!touching(wit.b)) return fail("B does not reach the horizon");

  for (const auto& p : wit.a) {
    for (const auto& q : sp.ball(p, wit.r)) {
      if (b.count(q)) return fail("N_r(A) meets B at " + show(q));
    }
  }
  return {};
}

}  // namespace coarsekit
