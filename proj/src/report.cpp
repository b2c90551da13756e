#include "coarsekit/report.hpp"

#include "coarsekit/spec_io.hpp"

namespace coarsekit {

using nlohmann::json;

json to_json(const Coords& c) { return json(c); }

Coords coords_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("point coordinates must be a JSON array");
  Coords c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw UsageError("point coordinates must be integers");
    c.push_back(v.get<Coord>());
  }
  return c;
}

namespace {

json points_json(const std::vector<Coords>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

std::vector<Coords> points_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("point list must be a JSON array");
  std::vector<Coords> out;
  for (const auto& p : j) out.push_back(coords_from_json(p));
  return out;
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw UsageError("operator entry: numerator/denominator must be an integer or a decimal string");
}

}  // namespace

json to_json(const TowerWitness& w) {
  json bounds = json::array();
  for (const auto& b : w.bounds) bounds.push_back({b.lower, b.upper});
  json towers = json::array();
  for (const auto& t : w.towers) towers.push_back(points_json(t));
  return {{"levels", w.levels}, {"bounds", bounds}, {"towers", towers}};
}

TowerWitness tower_witness_from_json(const json& j) {
  TowerWitness w;
  w.levels = j.at("levels").get<int>();
  for (const auto& b : j.at("bounds")) w.bounds.push_back({b.at(0).get<Distance>(), b.at(1).get<Distance>()});
  for (const auto& t : j.at("towers")) w.towers.push_back(points_from_json(t));
  return w;
}

json to_json(const PairFamilyWitness& w) {
  json fams = json::array();
  for (const auto& f : w.families) {
    json pairs = json::array();
    for (const auto& [x, y] : f.pairs) pairs.push_back({to_json(x), to_json(y)});
    fams.push_back({{"scale", f.scale}, {"bound", f.bound}, {"pairs", pairs}});
  }
  return {{"families", fams}};
}

PairFamilyWitness pair_witness_from_json(const json& j) {
  PairFamilyWitness w;
  for (const auto& f : j.at("families")) {
    PairFamily fam;
    fam.scale = f.at("scale").get<Distance>();
    fam.bound = f.at("bound").get<Distance>();
    for (const auto& p : f.at("pairs")) fam.pairs.emplace_back(coords_from_json(p.at(0)), coords_from_json(p.at(1)));
    w.families.push_back(std::move(fam));
  }
  return w;
}

json to_json(const SplitWitness& w) {
  return {{"r", w.r}, {"rho", w.rho}, {"margin", w.margin}, {"a", points_json(w.a)}, {"b", points_json(w.b)}};
}

SplitWitness split_witness_from_json(const json& j) {
  SplitWitness w;
  w.r = j.at("r").get<Distance>();
  w.rho = j.at("rho").get<Distance>();
  w.margin = j.at("margin").get<Distance>();
  w.a = points_from_json(j.at("a"));
  w.b = points_from_json(j.at("b"));
  return w;
}

json to_json(const BandOperator& a) {
  json out = json::array();
  for (const auto& [key, v] : a.entries()) {
    out.push_back({key.first, key.second, big(numerator(v)), big(denominator(v))});
  }
  return out;
}

BandOperator band_operator_from_json(const Window& w, const json& j) {
  if (!j.is_array()) throw UsageError("operator dump must be a JSON array");
  std::map<BandOperator::Key, Rational> e;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 4) throw UsageError("operator entry must be [row, col, num, den]");
    const BigInt den = big_from_json(row[3]);
    if (den == 0) throw UsageError("operator entry with zero denominator");
    e[{row[0].get<PointId>(), row[1].get<PointId>()}] = Rational(big_from_json(row[2]), den);
  }
  return BandOperator::from_entries(w, std::move(e));
}

json make_report(const ReportHeader& h, Epistemic tag, json results, json witnesses, std::string note) {
  json space = json::object();
  if (h.spec) space["spec"] = to_json(*h.spec);
  if (h.window) space["window"] = {{"horizon", h.window->horizon()}, {"size", h.window->size()}};
  return {
      {"schema", kReportSchema},
      {"toolkit_version", kToolkitVersion},
      {"command", {{"name", h.command}, {"parameters", h.parameters}}},
      {"space", space},
      {"tag", to_string(tag)},
      {"results", std::move(results)},
      {"witnesses", std::move(witnesses)},
      {"note", std::move(note)},
  };
}

}  // namespace coarsekit
