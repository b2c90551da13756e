#include <doctest.h>

#include "coarsekit/criteria.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coarsekit;

TEST_CASE("separation profile agrees with brute force on the zoo") {
  for (const auto& [name, w] : fixtures::small_zoo()) {
    CAPTURE(name);
    REQUIRE(w.size() <= 2000);
    for (Distance r = 1; r <= 3 && 2 * r <= w.horizon(); ++r) {
      CAPTURE(r);
      const auto prof = separation_profile(w, r);
      CHECK(prof.values.size() == w.interior(2 * r).size());
      for (const auto& v : prof.values) {
        const auto expect = oracle::separation(w, v.point, r);
        if (!expect) {
          CHECK(v.status == SeparationValue::Status::ExceedsWindow);
          continue;
        }
        CHECK(v.status != SeparationValue::Status::ExceedsWindow);
        CHECK(v.value == *expect);
        CHECK(v.value >= 1);
      }
    }
  }
}

TEST_CASE("separation profile preconditions") {
  const Window w = make_grid(false, 1, 10);
  CHECK_THROWS_AS(separation_profile(w, 0), UsageError);
  CHECK_THROWS_AS(separation_profile(w, 6), UsageError);
}

TEST_CASE("N has separation 1 and a bounded trend") {
  const Window w = make_grid(false, 1, 64);
  for (Distance r : {1, 3, 7}) {
    const auto prof = separation_profile(w, r);
    for (const auto& v : prof.values) CHECK(v.value == 1);
    const auto d = divergence_report(w, prof, 4);
    CHECK(d.trend == DivergenceReport::Trend::Bounded);
    CHECK(d.cap == 1);
  }
}

TEST_CASE("clusters with growing gaps diverge") {
  const Window w = make_cluster_space(fixtures::unit_pair(), fixtures::linear(2), 12);
  const auto prof = separation_profile(w, 1);
  for (const auto& v : prof.values) {
    const Coord n = w.coords(v.point)[0];
    CHECK(v.value == (n == 1 ? 6 : 2 * n + 2));
  }
  for (Distance r : {1, 2}) {
    const auto d = divergence_report(w, separation_profile(w, r), 3);
    CHECK(d.trend == DivergenceReport::Trend::Diverging);
  }
}

TEST_CASE("path pattern clusters diverge from the pattern diameter on") {
  const Window w = make_cluster_space(fixtures::path3(), fixtures::linear(2), 20);
  CHECK(divergence_report(w, separation_profile(w, 1), 3).trend == DivergenceReport::Trend::Bounded);
  for (Distance r = 2; r <= 4; ++r) {
    CAPTURE(r);
    CHECK(divergence_report(w, separation_profile(w, r), 3).trend == DivergenceReport::Trend::Diverging);
  }
}

TEST_CASE("M separation never exceeds 3r") {
  const Window w = make_M(8);
  for (Distance r = 1; r <= 27; ++r) {
    const auto prof = separation_profile(w, r);
    for (const auto& v : prof.values) CHECK(v.value <= 3 * r);
    const auto d = divergence_report(w, prof, 4);
    CHECK(d.trend == DivergenceReport::Trend::Bounded);
    CHECK(d.cap <= 3 * r);
  }
}

TEST_CASE("divergence report needs two nonempty annuli") {
  const Window w = make_grid(false, 1, 10);
  const auto prof = separation_profile(w, 1);
  CHECK_THROWS_AS(divergence_report(w, prof, 1), UsageError);
}
