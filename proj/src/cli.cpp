#include "coarsekit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "coarsekit/criteria.hpp"
#include "coarsekit/higson.hpp"
#include "coarsekit/report.hpp"
#include "coarsekit/roe.hpp"
#include "coarsekit/spec_io.hpp"
#include "coarsekit/witness_check.hpp"

namespace coarsekit::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string space;
  std::string out;
  std::string csv;
  std::string report;
  std::optional<Distance> horizon;
  int threads = 0;

  std::vector<Distance> radii{1};
  Distance r = 1;
  Distance rho = 2;
  std::optional<Distance> margin;
  std::vector<Distance> scales{1, 2, 3};
  std::size_t annuli = 4;

  int levels = 4;
  int towers = 6;
  Distance s0 = 2;
  Distance c = 4;
  std::uint64_t budget = 2'000'000;

  std::vector<Distance> pair_scales{2, 4, 8};
  Distance bound = 16;
  std::size_t pairs = 10;

  std::string set_a;
  std::string set_b = "basepoint";
  std::string epsilon = "1/2";

  std::size_t samples = 20;
  std::uint64_t seed = 0x5eed;
  Distance displacement = 3;
  std::vector<std::string> gens;
  std::vector<std::string> diags;
  bool indicators = false;
  int n0 = 2;
};

int resolve_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("COARSEKIT_THREADS")) {
    const int c = std::atoi(cap);
    if (c > 0) n = std::min(n, c);
  }
  return std::max(1, n);
}

/// Evaluates fn(0..n-1) on up to `threads` workers; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int threads, F fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(n, static_cast<std::size_t>(threads));
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Loaded {
  SpaceSpec spec;
  Window window;
};

Loaded load(const Options& o) {
  if (o.space.empty()) throw UsageError("--space is required");
  SpaceSpec spec = load_space_spec(o.space);
  if (o.horizon) spec.horizon = *o.horizon;
  Window w = build_window(spec);
  return {std::move(spec), std::move(w)};
}

PointSet parse_point_set(const Window& w, const std::string& text) {
  if (text == "basepoint") return {w.basepoint()};
  if (text.rfind("powers:", 0) == 0) {
    const Coord base = std::stoll(text.substr(7));
    if (base < 2) throw UsageError("powers:b needs b >= 2");
    PointSet out;
    for (const auto& p : w.points()) {
      if (p.coords.size() != 1 || p.coords[0] < 1) continue;
      Coord v = p.coords[0];
      while (v % base == 0) v /= base;
      if (v == 1) out.push_back(p.id);
    }
    return out;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw UsageError("point set must be 'basepoint', 'powers:b' or a JSON list of coordinates");
  }
  if (!j.is_array()) throw UsageError("point set must be a JSON list of coordinates");
  std::vector<PointId> ids;
  for (const auto& c : j) {
    const Coords coords = coords_from_json(c);
    auto id = w.find(coords);
    if (!id) throw UsageError("point " + c.dump() + " is not in the window");
    ids.push_back(*id);
  }
  return make_point_set(std::move(ids));
}

json points_json(const Window& w, const PointSet& s) {
  json out = json::array();
  for (PointId p : s) out.push_back(to_json(w.coords(p)));
  return out;
}

void emit(const Options& o, const json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

ReportHeader header(const std::string& name, json params, const Loaded& l) {
  return {name, std::move(params), &l.spec, &l.window};
}

// ---------------------------------------------------------------------------

json cmd_space_build(const Options& o) {
  const auto l = load(o);
  json pts = json::array();
  for (const auto& p : l.window.points()) {
    pts.push_back({{"id", p.id}, {"coords", to_json(p.coords)}, {"depth", l.window.depth(p.id)},
                   {"label", l.window.label(p.id)}});
  }
  return make_report(header("space build", json::object(), l), Epistemic::Profile,
                     {{"kind", l.spec.kind()}, {"points", pts}});
}

json cmd_space_info(const Options& o) {
  const auto l = load(o);
  json ulf = json::array();
  for (const auto& [r, n] : ulf_profile(l.window, std::min<Distance>(4, l.window.horizon()))) {
    ulf.push_back({{"r", r}, {"max_ball", n}});
  }
  const auto metric = check_metric(l.window, 10'000);
  json violations = json::array();
  for (const auto& v : metric.violations) violations.push_back(v.describe(l.window));
  return make_report(header("space info", json::object(), l), Epistemic::Profile,
                     {{"kind", l.spec.kind()},
                      {"size", l.window.size()},
                      {"horizon", l.window.horizon()},
                      {"ulf", ulf},
                      {"metric", {{"samples", metric.samples}, {"violations", violations}}}});
}

json cmd_profile(const Options& o) {
  const auto l = load(o);
  const auto profiles = parallel_map<SeparationProfile>(o.radii.size(), resolve_threads(o.threads), [&](std::size_t i) {
    return separation_profile(l.window, o.radii[i]);
  });
  json entries = json::array();
  std::ostringstream csv;
  csv << "r,point,value\n";
  for (const auto& p : profiles) {
    std::size_t exact = 0, upper = 0, exceeds = 0;
    std::optional<Distance> lo, hi;
    for (const auto& v : p.values) {
      csv << p.r << "," << v.point << ",";
      if (v.status == SeparationValue::Status::ExceedsWindow) {
        ++exceeds;
        csv << "inf\n";
        continue;
      }
      (v.status == SeparationValue::Status::Exact ? exact : upper)++;
      lo = std::min(lo.value_or(v.value), v.value);
      hi = std::max(hi.value_or(v.value), v.value);
      csv << v.value << "\n";
    }
    json div = nullptr;
    try {
      const auto d = divergence_report(l.window, p, o.annuli);
      json annuli = json::array();
      for (const auto& [a, b] : d.annuli) annuli.push_back({a, b});
      div = {{"trend", to_string(d.trend)}, {"cap", d.cap}, {"minima", d.minima}, {"annuli", annuli}};
    } catch (const UsageError&) {
    }
    entries.push_back({{"r", p.r},
                       {"points", p.values.size()},
                       {"exact", exact},
                       {"upper_bound", upper},
                       {"exceeds_window", exceeds},
                       {"min", lo ? json(*lo) : json(nullptr)},
                       {"max", hi ? json(*hi) : json(nullptr)},
                       {"divergence", div}});
  }
  if (!o.csv.empty()) {
    std::ofstream f(o.csv, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.csv);
    f << csv.str();
  }
  return make_report(header("analyze profile", {{"r", o.radii}, {"annuli", o.annuli}}, l), Epistemic::Profile,
                     {{"profiles", entries}}, json::object(),
                     "annulus minima are a finite proxy for the limit along the boundary");
}

json cmd_asdim0(const Options& o) {
  const auto l = load(o);
  const auto entries = parallel_map<Asdim0Entry>(o.scales.size(), resolve_threads(o.threads), [&](std::size_t i) {
    return asdim0_profile(l.window, {o.scales[i]}, o.margin).front();
  });
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"r", e.r},
                   {"max_interior_diameter", e.max_interior_diameter ? json(*e.max_interior_diameter) : json(nullptr)},
                   {"unbounded_at_window", e.unbounded_at_window},
                   {"components", e.components}});
  }
  json params = {{"scales", o.scales}};
  if (o.margin) params["margin"] = *o.margin;
  return make_report(header("analyze asdim0", params, l), Epistemic::Profile, {{"entries", out}});
}

json ends_params(const Options& o) {
  json p = {{"r", o.r}, {"rho", o.rho}};
  if (o.margin) p["margin"] = *o.margin;
  return p;
}

json cmd_ends(const Options& o) {
  const auto l = load(o);
  const auto rep = ends_report(l.window, o.r, o.rho, o.margin);
  json sizes = json::array();
  for (const auto& c : rep.touching) sizes.push_back(c.size());
  return make_report(header("analyze ends", ends_params(o), l), Epistemic::Profile,
                     {{"count", rep.count},
                      {"margin", rep.margin},
                      {"touching_sizes", sizes},
                      {"bounded_components", rep.bounded.size()}});
}

json cmd_split(const Options& o) {
  const auto l = load(o);
  const auto wit = split_witness(l.window, o.r, o.rho, o.margin);
  const auto h = header("analyze split", ends_params(o), l);
  if (!wit) {
    return make_report(h, Epistemic::NoWitnessAtScale, {{"found", false}}, json::object(),
                       "fewer than two horizon-touching components at this scale; not a proof");
  }
  return make_report(h, Epistemic::Certificate, {{"found", true}, {"a_size", wit->a.size()}, {"b_size", wit->b.size()}},
                     {{"split", to_json(*wit)}});
}

json cmd_m2(const Options& o) {
  const auto l = load(o);
  TowerParams p{o.levels, o.towers, o.s0, o.c, o.budget};
  const auto res = detect_m2(l.window, p);
  json bounds = json::array();
  for (const auto& b : tower_bounds(p)) bounds.push_back({b.lower, b.upper});
  const json params = {{"J", o.levels}, {"N", o.towers}, {"s0", o.s0}, {"c", o.c}, {"budget", o.budget}};
  const json results = {{"found", res.witness.has_value()},
                        {"bounds", bounds},
                        {"exhaustive", res.stats.exhaustive},
                        {"nodes", res.stats.nodes},
                        {"search_note", res.stats.note}};
  const auto h = header("detect m2", params, l);
  if (res.witness) return make_report(h, Epistemic::Certificate, results, {{"tower", to_json(*res.witness)}});
  return make_report(h, Epistemic::NoWitnessAtScale, results, json::object(),
                     "no tower family at these parameters; this does not prove non-embeddability");
}

json cmd_m32(const Options& o) {
  const auto l = load(o);
  const auto res = detect_m32(l.window, o.pair_scales, o.bound, o.pairs);
  json scales = json::array();
  for (const auto& s : res.scales) {
    scales.push_back({{"scale", s.scale}, {"found", s.family.has_value()}, {"max_disjoint_pairs", s.max_disjoint_pairs}});
  }
  const json params = {{"scales", o.pair_scales}, {"B", o.bound}, {"N", o.pairs}};
  const auto h = header("detect m32", params, l);
  if (res.witness) {
    return make_report(h, Epistemic::Certificate, {{"scales", scales}}, {{"pairs", to_json(*res.witness)}});
  }
  return make_report(h, Epistemic::NoWitnessAtScale, {{"scales", scales}}, json::object(),
                     "some scale has no pair family at these parameters; this does not prove absence");
}

HigsonFunction build_higson(const Options& o, const Window& w) {
  if (o.set_a.empty()) throw UsageError("--A is required");
  return higson_from_separated(w, parse_point_set(w, o.set_a), parse_point_set(w, o.set_b));
}

json cmd_higson_build(const Options& o) {
  const auto l = load(o);
  const auto h = build_higson(o, l.window);
  json blocks = json::array();
  for (const auto& [n, b] : h.blocks) blocks.push_back({{"n", n}, {"points", points_json(l.window, b)}});
  json nonzero = json::array();
  for (PointId x = 0; x < l.window.size(); ++x) {
    if (h.values[x] != 0) nonzero.push_back({to_json(l.window.coords(x)), to_string(h.values[x])});
  }
  return make_report(header("higson build", {{"A", o.set_a}, {"B", o.set_b}}, l), Epistemic::Profile,
                     {{"blocks", blocks}, {"selected", points_json(l.window, h.selected)}, {"nonzero", nonzero}});
}

json cmd_higson_variation(const Options& o) {
  const auto l = load(o);
  const auto h = build_higson(o, l.window);
  const Rational eps = parse_rational(o.epsilon);
  const auto rep = variation_report(l.window, h.values, eps, o.r);
  json pairs = json::array();
  for (const auto& [x, y] : rep.violators) pairs.push_back({to_json(l.window.coords(x)), to_json(l.window.coords(y))});
  return make_report(header("higson variation", {{"A", o.set_a}, {"B", o.set_b}, {"epsilon", o.epsilon}, {"r", o.r}}, l),
                     Epistemic::Profile,
                     {{"violators", pairs},
                      {"violator_count", rep.violators.size()},
                      {"enclosing_radius", rep.enclosing_radius},
                      {"sup_variation", to_string(rep.sup_variation)}});
}

json cmd_roe_identities(const Options& o) {
  const auto l = load(o);
  const auto checks = roe_identities(l.window, o.samples, o.seed, o.displacement);
  json out = json::array();
  bool all = true;
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}});
    all = all && c.failed == 0;
  }
  return make_report(
      header("roe identities", {{"samples", o.samples}, {"seed", o.seed}, {"displacement", o.displacement}}, l),
      Epistemic::Profile, {{"checks", out}, {"all_passed", all}});
}

TailTranslation parse_tail(const std::string& text, std::size_t k) {
  TailTranslation t;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "-") {
      t.map.emplace_back();
    } else {
      t.map.emplace_back(std::stoi(item));
    }
  }
  if (t.map.size() != k) throw UsageError("--gen '" + text + "' must list " + std::to_string(k) + " targets");
  return t;
}

std::vector<Rational> parse_diag(const std::string& text, std::size_t k) {
  std::vector<Rational> d;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) d.push_back(parse_rational(item));
  if (d.size() != k) throw UsageError("--diag '" + text + "' must list " + std::to_string(k) + " values");
  return d;
}

json cmd_roe_gns(const Options& o) {
  const auto l = load(o);
  const auto* cs = std::get_if<ClusterSpec>(&l.spec.shape);
  if (!cs) throw UsageError("roe gns needs a clusters space");
  const FiniteMetricSpace pattern(cs->pattern.labels, cs->pattern.distances);
  const std::size_t k = pattern.size();
  if (static_cast<Distance>(cs->count) < o.n0) throw UsageError("--n0 exceeds the cluster count");

  std::vector<TailTranslation> gens;
  for (const auto& g : o.gens) gens.push_back(parse_tail(g, k));
  std::vector<std::vector<Rational>> diags;
  for (const auto& d : o.diags) diags.push_back(parse_diag(d, k));
  if (o.indicators) {
    for (std::size_t q = 0; q < k; ++q) {
      std::vector<Rational> e(k, Rational(0));
      e[q] = 1;
      diags.push_back(std::move(e));
    }
  }
  const auto rep = cluster_rep(pattern, gens, diags);
  const auto real = realize_on_window(l.window, pattern, cs->count, gens, diags, o.n0, o.seed);

  std::size_t blocks = 0, matched = 0;
  for (int n = o.n0; n <= cs->count; ++n) {
    for (std::size_t i = 0; i < gens.size(); ++i, ++blocks) {
      matched += cluster_block(l.window, vf(l.window, real.translations[i]), n, k) == rep.translations[i];
    }
    for (std::size_t i = 0; i < diags.size(); ++i, ++blocks) {
      matched += cluster_block(l.window, real.diagonals[i].to_band(l.window), n, k) == rep.diagonals[i];
    }
  }

  std::mt19937_64 rng(o.seed);
  std::size_t agree = 0, zero = 0;
  json disagreements = json::array();
  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto a = random_combination(rng, gens.size(), diags.size());
    const auto kc = kernel_check(l.window, rep, real, a);
    agree += kc.agree();
    zero += kc.matrix_zero;
    if (!kc.agree()) disagreements.push_back(to_string(a));
  }
  const std::size_t dim = commutant_dimension(rep);
  return make_report(
      header("roe gns",
             {{"gens", o.gens}, {"diags", o.diags}, {"indicators", o.indicators}, {"samples", o.samples},
              {"seed", o.seed}, {"n0", o.n0}},
             l),
      Epistemic::Profile,
      {{"k", k},
       {"commutant_dimension", dim},
       {"irreducible", dim == 1},
       {"kernel", {{"samples", o.samples}, {"agree", agree}, {"zero", zero}, {"disagreements", disagreements}}},
       {"blocks", {{"checked", blocks}, {"matched", matched}}}});
}

// ---------------------------------------------------------------------------
// verify: re-checks stored certificates with the standalone checkers only.

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.report, std::ios::binary);
  if (!f) throw UsageError("cannot read " + o.report);
  json rep;
  try {
    rep = json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError(o.report + ": not valid JSON: " + e.what());
  }
  if (!rep.is_object() || rep.value("schema", "") != kReportSchema) throw UsageError(o.report + ": not a coarsekit report");
  const std::string name = rep.at("command").at("name").get<std::string>();
  if (rep.at("tag") != to_string(Epistemic::Certificate)) {
    out << "no certificate in " << name << " report (tag " << rep.at("tag").get<std::string>() << ")\n";
    return kExitOk;
  }
  const SpaceSpec spec = space_spec_from_json(rep.at("space").at("spec"));
  const Window w = build_window(spec);
  const json& params = rep.at("command").at("parameters");
  const json& wit = rep.at("witnesses");

  CheckResult res;
  if (name == "detect m2") {
    const auto tw = tower_witness_from_json(wit.at("tower"));
    res = verify_tower_witness(tw, w);
    if (res && (tw.levels != params.at("J").get<int>() || tw.towers.size() != params.at("N").get<std::size_t>())) {
      res = {false, "witness shape does not match the requested J and N"};
    }
  } else if (name == "detect m32") {
    const auto pw = pair_witness_from_json(wit.at("pairs"));
    res = verify_pair_family(pw, w);
    const auto scales = params.at("scales").get<std::vector<Distance>>();
    if (res && pw.families.size() != scales.size()) res = {false, "family count does not match the scales"};
    for (std::size_t i = 0; res && i < pw.families.size(); ++i) {
      if (pw.families[i].scale != scales[i] || pw.families[i].bound != params.at("B").get<Distance>() ||
          pw.families[i].pairs.size() != params.at("N").get<std::size_t>()) {
        res = {false, "family " + std::to_string(i) + " does not match the requested scale, B and N"};
      }
    }
  } else if (name == "analyze split") {
    const auto sw = split_witness_from_json(wit.at("split"));
    res = verify_split_witness(sw, w);
    if (res && (sw.r != params.at("r").get<Distance>() || sw.rho != params.at("rho").get<Distance>())) {
      res = {false, "witness scale does not match the requested r and rho"};
    }
  } else {
    throw UsageError("no checker for certificates of '" + name + "'");
  }
  if (!res) {
    err << "REJECTED " << name << ": " << res.reason << "\n";
    return kExitRejected;
  }
  out << "ACCEPTED " << name << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"coarsekit: finite-window evaluators for coarse-geometric criteria", "coarsekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write the report to this file instead of stdout");
  app.add_option("--threads", o.threads, "Worker threads for scale sweeps (capped by COARSEKIT_THREADS)");

  const auto with_space = [&](CLI::App* sub) {
    sub->add_option("--space", o.space, "Space description (JSON)")->required();
    sub->add_option("--horizon", o.horizon, "Override the window horizon");
  };
  const auto with_ends = [&](CLI::App* sub) {
    with_space(sub);
    sub->add_option("--r", o.r, "Chain scale");
    sub->add_option("--rho", o.rho, "Puncture radius around the basepoint");
    sub->add_option("--margin", o.margin, "Horizon-touching margin (default r + 1)");
  };

  auto* space = app.add_subcommand("space", "Build or describe a space window")->require_subcommand(1);
  auto* space_build = space->add_subcommand("build", "List the window points");
  auto* space_info = space->add_subcommand("info", "Window size, local finiteness and metric check");
  with_space(space_build);
  with_space(space_info);

  auto* analyze = app.add_subcommand("analyze", "Profiles and components")->require_subcommand(1);
  auto* profile = analyze->add_subcommand("profile", "Separation profile and divergence trend");
  with_space(profile);
  profile->add_option("--r", o.radii, "Scales (comma separated)")->delimiter(',');
  profile->add_option("--annuli", o.annuli, "Depth bands for the trend");
  profile->add_option("--csv", o.csv, "Also write r,point,value rows here");
  auto* asdim0 = analyze->add_subcommand("asdim0", "Chain-component diameters per scale");
  with_space(asdim0);
  asdim0->add_option("--scales", o.scales, "Scales (comma separated)")->delimiter(',');
  asdim0->add_option("--margin", o.margin, "Horizon-touching margin (default r + 1)");
  auto* ends = analyze->add_subcommand("ends", "Horizon-touching components beyond a puncture");
  with_ends(ends);
  auto* split = analyze->add_subcommand("split", "Split witness beyond a puncture");
  with_ends(split);

  auto* detect = app.add_subcommand("detect", "Witness searches")->require_subcommand(1);
  auto* m2 = detect->add_subcommand("m2", "Tower families");
  with_space(m2);
  m2->add_option("--J", o.levels, "Levels per tower");
  m2->add_option("--N", o.towers, "Number of towers");
  m2->add_option("--s0", o.s0, "Base scale");
  m2->add_option("--c", o.c, "Level width factor");
  m2->add_option("--budget", o.budget, "Search node budget");
  auto* m32 = detect->add_subcommand("m32", "Pair families");
  with_space(m32);
  m32->add_option("--scales", o.pair_scales, "Scales (comma separated)")->delimiter(',');
  m32->add_option("--B", o.bound, "Pair distance bound");
  m32->add_option("--N", o.pairs, "Pairs per scale");

  auto* higson = app.add_subcommand("higson", "Higson functions from separated sets")->require_subcommand(1);
  auto* hbuild = higson->add_subcommand("build", "Construct h");
  auto* hvar = higson->add_subcommand("variation", "Variation report of the constructed h");
  for (auto* sub : {hbuild, hvar}) {
    with_space(sub);
    sub->add_option("--A", o.set_a, "Point set: JSON list, powers:b, or basepoint")->required();
    sub->add_option("--B", o.set_b, "Point set: JSON list, powers:b, or basepoint");
  }
  hvar->add_option("--eps", o.epsilon, "Tolerance p/q");
  hvar->add_option("--r", o.r, "Scale");

  auto* roe = app.add_subcommand("roe", "Band operators")->require_subcommand(1);
  auto* ident = roe->add_subcommand("identities", "Sampled operator identities");
  with_space(ident);
  ident->add_option("--samples", o.samples, "Random translation pairs");
  ident->add_option("--seed", o.seed, "Random seed");
  ident->add_option("--displacement", o.displacement, "Maximal displacement of sampled translations");
  auto* gns = roe->add_subcommand("gns", "Finite cluster model on a clusters space");
  with_space(gns);
  gns->add_option("--gen", o.gens, "Tail translation, e.g. 1,2,- (repeatable)");
  gns->add_option("--diag", o.diags, "Limit diagonal, e.g. 1,0,1/2 (repeatable)");
  gns->add_flag("--indicators", o.indicators, "Add every pattern point indicator");
  gns->add_option("--samples", o.samples, "Random combinations for the kernel check");
  gns->add_option("--seed", o.seed, "Random seed");
  gns->add_option("--n0", o.n0, "Stabilization index");

  auto* verify = app.add_subcommand("verify", "Re-check the certificate stored in a report");
  verify->add_option("report", o.report, "Report JSON")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out, err);
    json report;
    if (*space_build) report = cmd_space_build(o);
    else if (*space_info) report = cmd_space_info(o);
    else if (*profile) report = cmd_profile(o);
    else if (*asdim0) report = cmd_asdim0(o);
    else if (*ends) report = cmd_ends(o);
    else if (*split) report = cmd_split(o);
    else if (*m2) report = cmd_m2(o);
    else if (*m32) report = cmd_m32(o);
    else if (*hbuild) report = cmd_higson_build(o);
    else if (*hvar) report = cmd_higson_variation(o);
    else if (*ident) report = cmd_roe_identities(o);
    else if (*gns) report = cmd_roe_gns(o);
    emit(o, report, out);
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace coarsekit::cli
