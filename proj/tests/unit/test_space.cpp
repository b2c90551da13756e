#include <doctest.h>

#include <random>

#include "coarsekit/space.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coarsekit;

namespace {

/// A three-point space whose distance oracle is broken on purpose.
class BrokenSpace final : public SpacePresentation {
 public:
  explicit BrokenSpace(int mode) : mode_(mode) {}
  std::string kind() const override { return "broken"; }
  Coords basepoint() const override { return {0}; }
  bool contains(const Coords& p) const override { return p.size() == 1 && p[0] >= 0 && p[0] < 3; }
  Distance distance(const Coords& a, const Coords& b) const override {
    const Distance d = std::abs(a[0] - b[0]);
    if (mode_ == 0 && a[0] == 1 && b[0] == 2) return -1;
    if (mode_ == 1 && a[0] == 0 && b[0] == 1) return 2;
    if (mode_ == 2 && d == 2) return 5;
    return d;
  }
  std::vector<Coords> ball(const Coords&, Distance) const override { return {{0}, {1}, {2}}; }

 private:
  int mode_;
};

}  // namespace

TEST_CASE("window points are the exact basepoint ball in canonical order") {
  for (const auto& [name, w] : fixtures::small_zoo()) {
    CAPTURE(name);
    CHECK(w.point(w.basepoint()).coords == w.space().basepoint());
    for (PointId i = 0; i < w.size(); ++i) {
      CHECK(w.depth(i) == w.space().distance(w.space().basepoint(), w.coords(i)));
      CHECK(w.depth(i) <= w.horizon());
      CHECK(w.space().contains(w.coords(i)));
      CHECK(w.find(w.coords(i)) == std::optional<PointId>(i));
      if (i > 0) {
        const auto prev = std::make_pair(w.depth(i - 1), w.coords(i - 1));
        CHECK(prev < std::make_pair(w.depth(i), w.coords(i)));
      }
    }
  }
}

TEST_CASE("grid window size matches direct enumeration") {
  const Window n2 = make_grid(false, 2, 12);
  CHECK(n2.size() == 13 * 14 / 2);
  const Window z2 = make_grid(true, 2, 8);
  std::size_t count = 0;
  for (int x = -8; x <= 8; ++x) {
    for (int y = -8; y <= 8; ++y) count += std::abs(x) + std::abs(y) <= 8;
  }
  CHECK(z2.size() == count);
}

TEST_CASE("window balls agree with brute force") {
  std::mt19937_64 rng(7);
  for (const auto& [name, w] : fixtures::small_zoo()) {
    CAPTURE(name);
    for (int s = 0; s < 20; ++s) {
      const PointId x = rng() % w.size();
      const Distance r = rng() % 6;
      CHECK(w.ball(x, r) == oracle::ball(w, x, r));
    }
  }
}

TEST_CASE("interior and neighborhood") {
  const Window w = make_grid(false, 1, 20);
  const PointSet in = w.interior(5);
  CHECK(in.size() == 16);
  for (PointId p : in) CHECK(w.depth(p) <= 15);
  const PointSet a = {*w.find({3}), *w.find({10})};
  const PointSet nb = neighborhood(w, a, 2);
  PointSet expect;
  for (PointId y = 0; y < w.size(); ++y) {
    if (oracle::dist(w, y, a[0]) <= 2 || oracle::dist(w, y, a[1]) <= 2) expect.push_back(y);
  }
  CHECK(nb == expect);
}

TEST_CASE("separated partitions pass the pairwise checker") {
  for (const auto& [name, w] : fixtures::small_zoo()) {
    CAPTURE(name);
    for (Distance r = 1; r <= 8; ++r) {
      CAPTURE(r);
      const Partition p = separated_partition(w, r);
      std::vector<int> owner(w.size(), -1);
      for (std::size_t c = 0; c < p.classes.size(); ++c) {
        for (PointId x : p.classes[c]) {
          REQUIRE(owner[x] == -1);
          owner[x] = static_cast<int>(c);
        }
        for (std::size_t i = 0; i < p.classes[c].size(); ++i) {
          for (std::size_t j = i + 1; j < p.classes[c].size(); ++j) {
            CHECK(oracle::dist(w, p.classes[c][i], p.classes[c][j]) > r);
          }
        }
      }
      CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
      std::size_t max_ball = 0;
      for (PointId x = 0; x < w.size(); ++x) max_ball = std::max(max_ball, oracle::ball(w, x, r).size());
      CHECK(p.classes.size() <= max_ball);
    }
  }
  CHECK(separated_partition(make_grid(false, 1, 40), 1).classes.size() == 2);
}

TEST_CASE("ulf profile agrees with brute force") {
  const Window w = make_free_group(2, 4);
  const auto prof = ulf_profile(w, 3);
  for (Distance r = 0; r <= 3; ++r) {
    std::size_t best = 0;
    for (PointId x = 0; x < w.size(); ++x) {
      if (w.depth(x) <= 4 - r) best = std::max(best, oracle::ball(w, x, r).size());
    }
    CHECK(prof.at(r) == best);
  }
  CHECK(prof.at(1) == 5);
}

TEST_CASE("metric check is clean on the zoo") {
  for (const auto& [name, w] : fixtures::small_zoo()) {
    CAPTURE(name);
    const auto rep = check_metric(w, 2000);
    CHECK(rep.samples == 2000);
    CHECK(rep.ok());
  }
}

TEST_CASE("metric check reports corrupted oracles") {
  const Window neg(std::make_shared<BrokenSpace>(0), 2);
  const auto r0 = check_metric(neg, 500);
  REQUIRE(r0.violations.size() == 1);
  CHECK(r0.violations[0].kind == MetricViolation::Kind::Negative);

  const Window asym(std::make_shared<BrokenSpace>(1), 2);
  const auto r1 = check_metric(asym, 500);
  CHECK(std::any_of(r1.violations.begin(), r1.violations.end(),
                    [](const MetricViolation& v) { return v.kind == MetricViolation::Kind::Asymmetric; }));

  const Window tri(std::make_shared<BrokenSpace>(2), 5);
  const auto r2 = check_metric(tri, 500);
  CHECK(std::any_of(r2.violations.begin(), r2.violations.end(),
                    [](const MetricViolation& v) { return v.kind == MetricViolation::Kind::Triangle; }));
  CHECK_FALSE(r2.violations.front().describe(tri).empty());
}

TEST_CASE("checked distance rejects foreign points") {
  GridSpace n(false, 1);
  CHECK(distance(n, {2}, {7}) == 5);
  CHECK_THROWS_AS(distance(n, {-1}, {7}), UsageError);
  CHECK_THROWS_AS(distance(n, {1, 2}, {7}), UsageError);
}
