#include <doctest.h>

#include "coarsekit/higson.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coarsekit;

namespace {

PointSet powers_of_two(const Window& w) {
  std::vector<PointId> out;
  for (Coord p = 1; p <= w.horizon(); p *= 2) out.push_back(*w.find({p}));
  return make_point_set(std::move(out));
}

Distance set_distance(const Window& w, PointId x, const PointSet& s) {
  Distance best = std::numeric_limits<Distance>::max();
  for (PointId y : s) best = std::min(best, oracle::dist(w, x, y));
  return best;
}

Distance set_distance(const Window& w, const PointSet& s, const PointSet& t) {
  Distance best = std::numeric_limits<Distance>::max();
  for (PointId x : s) best = std::min(best, set_distance(w, x, t));
  return best;
}

std::vector<std::pair<PointId, PointId>> brute_violators(const Window& w, const std::vector<Rational>& h,
                                                         const Rational& eps, Distance r) {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId x = 0; x < w.size(); ++x) {
    for (PointId y = x + 1; y < w.size(); ++y) {
      if (oracle::dist(w, x, y) > r) continue;
      if (!w.in_interior(x, r) && !w.in_interior(y, r)) continue;
      if (abs(h[x] - h[y]) > eps) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Higson function from powers of two on N") {
  const Window w = make_grid(false, 1, 1024);
  const PointSet a = powers_of_two(w);
  const PointSet b{w.basepoint()};
  const auto f = higson_from_separated(w, a, b);

  // Blocks partition a and satisfy the separation conditions.
  PointSet seen;
  for (const auto& [n, block] : f.blocks) {
    CAPTURE(n);
    CHECK(set_distance(w, block, b) >= n);
    for (const auto& [m, other] : f.blocks) {
      if (m <= n - 2) CHECK(set_distance(w, block, other) > 2 * n);
    }
    seen.insert(seen.end(), block.begin(), block.end());
  }
  CHECK(make_point_set(seen) == a);

  // Values recomputed from the blocks.
  for (PointId x = 0; x < w.size(); ++x) {
    Rational expect = 0;
    for (const auto& [k, block] : f.blocks) {
      if (k % 2) continue;
      const Distance half = k / 2;
      const Distance d = set_distance(w, x, block);
      if (d < half) expect += Rational(half - d, half);
    }
    CHECK(f.values[x] == expect);
    CHECK(f.values[x] >= 0);
    CHECK(f.values[x] <= 1);
  }
  for (PointId x : f.selected) CHECK(f.values[x] == 1);
  for (PointId x : b) CHECK(f.values[x] == 0);
  CHECK(f.selected.size() >= 3);
  CHECK(std::includes(a.begin(), a.end(), f.selected.begin(), f.selected.end()));
}

TEST_CASE("enclosing radius stabilizes as the horizon grows") {
  const Rational eps(1, 2);
  std::vector<Distance> radii;
  for (Distance h : {2048, 4096, 8192}) {
    const Window w = make_grid(false, 1, h);
    const auto f = higson_from_separated(w, powers_of_two(w), {w.basepoint()});
    const auto rep = variation_report(w, f.values, eps, 5);
    CHECK(rep.violators == brute_violators(w, f.values, eps, 5));
    radii.push_back(rep.enclosing_radius);
  }
  CHECK(radii[0] == radii[1]);
  CHECK(radii[1] == radii[2]);
  CHECK(radii[0] < 1024);
}

TEST_CASE("parity on Z violates everywhere") {
  const Window w = make_grid(true, 1, 50);
  std::vector<Rational> h(w.size());
  for (PointId x = 0; x < w.size(); ++x) h[x] = std::abs(w.coords(x)[0]) % 2;
  const auto rep = variation_report(w, h, Rational(1, 2), 1);
  CHECK(rep.enclosing_radius == w.horizon());
  CHECK(rep.sup_variation == 1);
  CHECK(rep.violators == brute_violators(w, h, Rational(1, 2), 1));

  const std::vector<Rational> flat(w.size(), Rational(3, 7));
  const auto calm = variation_report(w, flat, Rational(1, 2), 3);
  CHECK(calm.violators.empty());
  CHECK(calm.enclosing_radius == 0);
  CHECK(calm.sup_variation == 0);
}

TEST_CASE("pointwise max keeps variation within the larger of the two") {
  const Window w = make_grid(false, 1, 512);
  const auto f = higson_from_separated(w, powers_of_two(w), {w.basepoint()});
  std::vector<PointId> squares;
  for (Coord k = 1; k * k <= 512; ++k) squares.push_back(*w.find({k * k}));
  const auto g = higson_from_separated(w, make_point_set(squares), {w.basepoint()});
  const auto m = higson_max(f, g);
  for (PointId x = 0; x < w.size(); ++x) CHECK(m.values[x] == std::max(f.values[x], g.values[x]));
  for (Distance r : {1, 3, 8}) {
    const Rational tiny(1, 1000000);
    const auto vf = variation_report(w, f.values, tiny, r).sup_variation;
    const auto vg = variation_report(w, g.values, tiny, r).sup_variation;
    CHECK(variation_report(w, m.values, tiny, r).sup_variation <= std::max(vf, vg));
  }
}

TEST_CASE("Higson construction preconditions") {
  const Window w = make_grid(false, 1, 40);
  const PointSet b{*w.find({10})};
  CHECK_THROWS_AS(higson_from_separated(w, {*w.find({0}), *w.find({5})}, b), PreconditionError);
  CHECK_THROWS_AS(higson_from_separated(w, {}, b), UsageError);
  CHECK_THROWS_AS(higson_from_separated(w, b, b), UsageError);
}
