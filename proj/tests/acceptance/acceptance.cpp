// Acceptance suite: one PASS/FAIL line per criterion. Derived values are
// recomputed here with the brute-force helpers from the unit tests.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../golden/golden.hpp"
#include "../unit/fixtures.hpp"
#include "../unit/oracles.hpp"
#include "coarsekit/criteria.hpp"
#include "coarsekit/higson.hpp"
#include "coarsekit/roe.hpp"
#include "coarsekit/translations.hpp"
#include "coarsekit/witness_check.hpp"

using namespace coarsekit;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << what << "; ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// ---------------------------------------------------------------------------

void metric_validity(Verdict& v) {
  std::vector<fixtures::Named> zoo = fixtures::small_zoo();
  zoo.push_back({"F2 H6", make_free_group(2, 6)});
  zoo.push_back({"M 7 digits", make_M(7)});
  zoo.push_back({"M2 H3600", make_Mk(2, 3600)});
  zoo.push_back({"M32 H1.2e7", make_M32(12'000'000)});
  zoo.push_back({"finite", build_window({fixtures::path3(), 2})});
  double worst = 0;
  for (const auto& [name, w] : zoo) {
    if (w.size() > 5000) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = check_metric(w, 10'000, 17);
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    v.require(rep.ok(), name + ": " + std::to_string(rep.violations.size()) + " violations");
    v.require(rep.samples == 10'000, name + ": sample count");
    v.require(t < 5, name + ": " + str(t) + " s");
  }
  if (v.pass) v.detail << zoo.size() << " windows, 10^4 triples each, slowest " << str(worst) << " s";
}

void ternary_oracle(Verdict& v) {
  const Window w = make_M(10);
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Coord a = static_cast<Coord>(rng() % w.size()), b = static_cast<Coord>(rng() % w.size());
    const Distance expect = std::abs(oracle::ternary_value(a) - oracle::ternary_value(b));
    if (w.space().distance({a}, {b}) != expect) ++mismatches;
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " of 200 pairs differ");
  if (v.pass) v.detail << "200 random pairs match the digit formula";
}

void free_group(Verdict& v) {
  const Window w = make_free_group(2, 4);
  std::size_t checked = 0;
  for (PointId x = 0; x < w.size(); ++x) {
    const auto bfs = oracle::cayley_bfs(2, w.coords(x), 8);
    for (PointId y = 0; y < w.size(); ++y) {
      ++checked;
      const auto it = bfs.find(w.coords(y));
      if (it == bfs.end() || it->second != w.distance(x, y)) {
        v.require(false, "pair " + w.label(x) + ", " + w.label(y));
        return;
      }
    }
  }
  const auto b2 = oracle::cayley_bfs(2, {}, 2).size();
  v.require(b2 == 17, "|B_2| = " + std::to_string(b2));
  v.require(make_free_group(2, 2).size() == 17, "window B_2 size");
  if (v.pass) v.detail << checked << " pairs in B_4 agree with Cayley-graph BFS, |B_2| = 17";
}

void partition(Verdict& v) {
  std::size_t runs = 0;
  for (const auto& [name, w] : fixtures::small_zoo()) {
    for (Distance r = 1; r <= 8; ++r) {
      ++runs;
      const Partition p = separated_partition(w, r);
      std::vector<int> owner(w.size(), -1);
      bool ok = true;
      for (std::size_t c = 0; c < p.classes.size(); ++c) {
        for (PointId x : p.classes[c]) {
          ok = ok && owner[x] == -1;
          owner[x] = static_cast<int>(c);
        }
        for (std::size_t i = 0; i < p.classes[c].size(); ++i) {
          for (std::size_t j = i + 1; j < p.classes[c].size(); ++j) {
            ok = ok && oracle::dist(w, p.classes[c][i], p.classes[c][j]) > r;
          }
        }
      }
      ok = ok && std::count(owner.begin(), owner.end(), -1) == 0;
      std::size_t max_ball = 0;
      for (PointId x = 0; x < w.size(); ++x) max_ball = std::max(max_ball, oracle::ball(w, x, r).size());
      v.require(ok, name + " r=" + std::to_string(r) + ": not an r-separated partition");
      v.require(p.classes.size() <= max_ball, name + " r=" + std::to_string(r) + ": too many classes");
    }
  }
  const auto n = separated_partition(make_grid(false, 1, 40), 1).classes.size();
  v.require(n == 2, "N at r=1 gave " + std::to_string(n) + " classes");
  if (v.pass) v.detail << runs << " (space, r) runs pass the pairwise checker; N at r=1 has 2 classes";
}

void decomposition(Verdict& v) {
  const std::vector<fixtures::Named> spaces = {{"N", make_grid(false, 1, 40)}, {"Z2", make_grid(true, 2, 10)}};
  std::size_t n1_parts = 0;
  for (const auto& [name, w] : spaces) {
    for (Distance n = 1; n <= 3; ++n) {
      const std::string tag = name + " n=" + std::to_string(n);
      const BoundedRelation rel = relation_at(w, n);
      const auto parts = decompose(w, rel);
      std::multiset<Arrow> covered;
      for (const auto& f : parts) {
        std::set<PointId> targets;
        for (const auto& [x, y] : f.graph()) {
          covered.insert({x, y});
          v.require(targets.insert(y).second, tag + ": part not injective");
          v.require(oracle::dist(w, x, y) <= n, tag + ": displacement exceeds n");
        }
      }
      v.require(covered == std::multiset<Arrow>(rel.pairs.begin(), rel.pairs.end()), tag + ": not an exact cover");
      v.require(parts.size() <= max_degree(rel), tag + ": more parts than the maximal degree");
      if (name == "N" && n == 1) n1_parts = parts.size();
    }
  }
  v.require(n1_parts == 3, "E(1) on N gave " + std::to_string(n1_parts) + " parts");
  if (v.pass) v.detail << "exact disjoint covers within the degree bound; E(1) on N has 3 parts";
}

void closed_orbit_profile(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  const Window clusters = make_cluster_space(fixtures::path3(), fixtures::linear(2), 20);
  for (Distance r = 2; r <= 4; ++r) {
    const auto d = divergence_report(clusters, separation_profile(clusters, r), 3);
    v.require(d.trend == DivergenceReport::Trend::Diverging, "clusters r=" + std::to_string(r) + " not diverging");
  }
  const Window n = make_grid(false, 1, 64);
  for (Distance r = 1; r <= 8; ++r) {
    const auto d = divergence_report(n, separation_profile(n, r), 4);
    v.require(d.trend == DivergenceReport::Trend::Bounded && d.cap == 1, "N r=" + std::to_string(r));
  }
  const Window m = make_M(8);
  Distance worst_ratio_num = 0, worst_r = 1;
  for (Distance r = 1; r <= 27; ++r) {
    const auto prof = separation_profile(m, r);
    for (const auto& s : prof.values) {
      const auto brute = oracle::separation(m, s.point, r);
      v.require(brute && *brute == s.value, "M r=" + std::to_string(r) + ": profile differs from brute force");
      v.require(s.value <= 3 * r, "M r=" + std::to_string(r) + ": s_r exceeds 3r");
      if (s.value * worst_r > worst_ratio_num * r) worst_ratio_num = s.value, worst_r = r;
    }
    const auto d = divergence_report(m, prof, 4);
    v.require(d.trend == DivergenceReport::Trend::Bounded, "M r=" + std::to_string(r) + " not bounded");
  }
  const double t = seconds_since(t0);
  v.require(t < 10, "took " + str(t) + " s");
  if (v.pass) {
    v.detail << "clusters diverge for r=2..4, N bounded with cap 1, M bounded with max s_r/r = " << worst_ratio_num
             << "/" << worst_r << "; " << str(t) << " s";
  }
}

void tower_detector(Verdict& v) {
  const TowerParams p{4, 6, 2, 4, 2'000'000};
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, w] : std::vector<fixtures::Named>{{"M2", make_Mk(2, 3600)}, {"N", make_grid(false, 1, 64)}}) {
    const auto res = detect_m2(w, p);
    v.require(res.witness.has_value(), name + ": no witness");
    if (res.witness) v.require(static_cast<bool>(verify_tower_witness(*res.witness, w)), name + ": checker rejects");
  }
  const double t = seconds_since(t0);
  v.require(t < 10, "positives took " + str(t) + " s");
  const std::vector<fixtures::Named> negatives = {
      {"M1", make_Mk(1, 400)},
      {"bounded clusters", make_cluster_space(fixtures::unit_pair(), fixtures::quadratic(1), 12)}};
  for (const auto& [name, w] : negatives) {
    const auto res = detect_m2(w, p);
    v.require(!res.witness.has_value(), name + ": unexpected witness");
    v.require(res.stats.exhaustive, name + ": search not exhaustive");
  }
  if (v.pass) v.detail << "verified witnesses on M2 and N in " << str(t) << " s; exhaustive no-witness on M1 and bounded clusters";
}

void pair_detector(Verdict& v) {
  const std::vector<fixtures::Named> positives = {{"Z", make_grid(true, 1, 40)},
                                                  {"N", make_grid(false, 1, 64)},
                                                  {"M", make_M(8)},
                                                  {"M32", make_M32(12'000'000)}};
  for (const auto& [name, w] : positives) {
    const auto res = detect_m32(w, {2, 4, 8}, 16, 10);
    v.require(res.witness.has_value(), name + ": no pair family");
    if (res.witness) v.require(static_cast<bool>(verify_pair_family(*res.witness, w)), name + ": checker rejects");
  }
  const Window wide = make_cluster_space(fixtures::unit_pair(), fixtures::linear(8), 12);
  const auto neg = detect_m32(wide, {2}, 16, 10);
  v.require(!neg.witness.has_value() && neg.scales[0].max_disjoint_pairs == 0, "wide clusters: pairs found");
  if (v.pass) v.detail << "verified families on Z, N, M, M32; wide clusters admit 0 pairs at scale 2";
}

void pseudo_orbits(Verdict& v) {
  const std::vector<fixtures::Named> one_ended = {
      {"N", make_grid(false, 1, 40)}, {"N2", make_grid(false, 2, 20)}, {"Z2", make_grid(true, 2, 20)}};
  for (const auto& [name, w] : one_ended) {
    for (Distance r : {1, 2, 3}) {
      for (Distance rho : {2, 4, 6}) {
        const auto c = ends_report(w, r, rho).count;
        v.require(c == 1, name + " (r=" + std::to_string(r) + ", rho=" + std::to_string(rho) + ") ends = " +
                              std::to_string(c));
      }
    }
  }
  const Window z = make_grid(true, 1, 40);
  for (Distance r : {1, 2, 3}) {
    for (Distance rho : {2, 4, 6}) v.require(ends_report(z, r, rho).count == 2, "Z ends != 2");
  }
  const Window f2 = make_free_group(2, 8);
  std::size_t f2_min = 1000;
  for (const auto& [r, rho, margin] : std::vector<std::tuple<Distance, Distance, Distance>>{{1, 1, 2}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
    f2_min = std::min(f2_min, ends_report(f2, r, rho, margin).count);
  }
  v.require(f2_min >= 2, "F2 ends = " + std::to_string(f2_min));
  const auto sz = split_witness(z, 1, 2);
  v.require(sz && verify_split_witness(*sz, z), "Z: no verified split");
  const auto sf = split_witness(f2, 2, 3, 2);
  v.require(sf && verify_split_witness(*sf, f2), "F2: no verified split");
  v.require(!split_witness(make_grid(true, 2, 20), 2, 4).has_value(), "Z2: unexpected split");
  if (v.pass) v.detail << "1 end on N, N2, Z2 over a 3x3 grid; 2 on Z; >= " << f2_min << " on F2; splits on Z and F2 only";
}

void asdim0(Verdict& v) {
  const auto m = std::make_shared<TernarySpace>();
  const Window small(m, 3 * 1092), large(m, 6 * 1092);
  const std::vector<Distance> scales = [] {
    std::vector<Distance> s;
    for (Distance r = 1; r <= 27; ++r) s.push_back(r);
    return s;
  }();
  const auto prof = asdim0_profile(small, scales);
  const auto prof2 = asdim0_profile(large, scales);
  std::vector<Distance> over;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const Distance r = prof[i].r;
    Distance brute = 0;
    const PointSet all = small.all();
    for (const auto& c : oracle::components(small, all, r)) {
      const bool touching = std::any_of(c.begin(), c.end(), [&](PointId x) { return small.depth(x) >= small.horizon() - (r + 1); });
      if (!touching) brute = std::max(brute, oracle::diameter(small, c));
    }
    v.require(prof[i].max_interior_diameter == brute, "M r=" + std::to_string(r) + ": union-find disagrees with BFS");
    v.require(prof[i].max_interior_diameter == prof2[i].max_interior_diameter,
              "M r=" + std::to_string(r) + ": changes when the horizon doubles");
    if (prof[i].max_interior_diameter.value_or(0) > 2 * r) over.push_back(r);
  }
  if (!over.empty()) {
    std::string list;
    for (Distance r : over) list += (list.empty() ? "" : ",") + std::to_string(r);
    v.require(false, "M max interior diameter exceeds 2r at r=" + list + " (e.g. r=15: " +
                         std::to_string(*prof[14].max_interior_diameter) + ")");
  }
  const auto z = asdim0_profile(make_grid(true, 1, 40), {1});
  v.require(z[0].unbounded_at_window, "Z not flagged at r=1");
  if (v.pass) v.detail << "M diameters <= 2r and stable; Z flagged at r=1";
}

void higson(Verdict& v) {
  const auto powers = [](const Window& w) {
    std::vector<PointId> out;
    for (Coord p = 1; p <= w.horizon(); p *= 2) out.push_back(*w.find({p}));
    return make_point_set(std::move(out));
  };
  std::vector<Distance> radii;
  for (Distance h : {4096, 8192}) {
    const Window w = make_grid(false, 1, h);
    const auto f = higson_from_separated(w, powers(w), {w.basepoint()});
    for (PointId x : f.selected) v.require(f.values[x] == 1, "h != 1 on a selected point");
    v.require(f.values[w.basepoint()] == 0, "h != 0 on B");
    v.require(f.selected.size() >= 3, "fewer than 3 selected points");
    radii.push_back(variation_report(w, f.values, Rational(1, 2), 5).enclosing_radius);
  }
  v.require(radii[0] == radii[1], "R0 moved from " + std::to_string(radii[0]) + " to " + std::to_string(radii[1]));

  const Window w = make_grid(false, 1, 1024);
  const auto f = higson_from_separated(w, powers(w), {w.basepoint()});
  std::vector<PointId> squares;
  for (Coord k = 1; k * k <= 1024; ++k) squares.push_back(*w.find({k * k}));
  const auto g = higson_from_separated(w, make_point_set(squares), {w.basepoint()});
  const auto mx = higson_max(f, g);
  for (Distance r : {1, 5, 20}) {
    const Rational tiny(1, 1'000'000);
    const auto vm = variation_report(w, mx.values, tiny, r).sup_variation;
    const auto vf = variation_report(w, f.values, tiny, r).sup_variation;
    const auto vg = variation_report(w, g.values, tiny, r).sup_variation;
    v.require(vm <= std::max(vf, vg), "max variation bound fails at r=" + std::to_string(r));
  }
  if (v.pass) v.detail << "h = 1 on A', 0 on B; R0 = " << radii[0] << " at H = 2^12 and 2^13; max bound holds";
}

void roe_identities_check(Verdict& v) {
  const std::vector<fixtures::Named> spaces = {{"N", make_grid(false, 1, 64)},
                                               {"M", make_M(6)},
                                               {"clusters", make_cluster_space(fixtures::path3(), fixtures::linear(2), 20)}};
  std::size_t checked = 0;
  for (const auto& [name, w] : spaces) {
    for (const auto& c : roe_identities(w, 20, 99)) {
      checked += c.checked;
      v.require(c.checked == 20 && c.failed == 0, name + ": " + c.name + " failed " + std::to_string(c.failed));
    }
  }
  if (v.pass) v.detail << checked << " exact identity checks, zero failures";
}

void gns_model(Verdict& v) {
  const auto p = fixtures::path3();
  const FiniteMetricSpace pattern(p.labels, p.distances);
  const std::vector<TailTranslation> gens = {{{1, 2, std::nullopt}}};
  std::vector<std::vector<Rational>> diags(3, std::vector<Rational>(3));
  for (std::size_t q = 0; q < 3; ++q) diags[q][q] = 1;
  const auto rep = cluster_rep(pattern, gens, diags);
  const std::size_t dim = commutant_dimension(rep);
  v.require(dim == 1, "commutant dimension " + std::to_string(dim));

  const int count = 20, n0 = 4;
  const Window w = make_cluster_space(p, fixtures::linear(2), count);
  const auto real = realize_on_window(w, pattern, count, gens, diags, n0, 7);
  std::mt19937_64 rng(13);
  std::size_t agree = 0, zero = 0, blocks = 0;
  for (int s = 0; s < 100; ++s) {
    const auto a = random_combination(rng, gens.size(), diags.size());
    const auto kc = kernel_check(w, rep, real, a);
    agree += kc.agree();
    zero += kc.matrix_zero;
    if (s < 20) {
      const Matrix model = evaluate(rep, a);
      const BandOperator op = evaluate(w, real, a);
      for (int n = n0; n <= count; ++n) {
        v.require(cluster_block(w, op, n, 3) == model, "cluster " + std::to_string(n) + " block differs");
        ++blocks;
      }
    }
  }
  v.require(agree == 100, "kernel agreement " + std::to_string(agree) + "/100");
  if (v.pass) {
    v.detail << "commutant dimension 1; kernel agreement 100/100 (" << zero << " in the kernel); " << blocks
             << " tail blocks match";
  }
}

void cli_determinism(Verdict& v) {
  const auto res = golden::run_suite(COARSEKIT_GOLDEN_DIR "/cases.txt", COARSEKIT_GOLDEN_DIR "/expected",
                                     COARSEKIT_CONFIG_DIR);
  for (const auto& line : res.lines) {
    if (line.rfind("FAIL", 0) == 0) v.require(false, line);
  }
  v.require(res.certificates > 0, "no certificates in the suite");
  if (v.pass) v.detail << res.cases << " golden reports reproduced twice; " << res.certificates << " certificates re-verified";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"metric validity", metric_validity},
      {"M distance oracle", ternary_oracle},
      {"free group balls", free_group},
      {"separated partitions", partition},
      {"relation decomposition", decomposition},
      {"separation profile trends", closed_orbit_profile},
      {"tower detector", tower_detector},
      {"pair detector", pair_detector},
      {"ends and splits", pseudo_orbits},
      {"asdim-0 profile", asdim0},
      {"Higson construction", higson},
      {"Roe identities", roe_identities_check},
      {"finite cluster model", gns_model},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::string detail = v.detail.str();
    if (detail.size() >= 2 && detail.compare(detail.size() - 2, 2, "; ") == 0) detail.resize(detail.size() - 2);
    std::cout << "criterion " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << (v.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
