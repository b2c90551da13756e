#pragma once

#include <string>

#include <json.hpp>

#include "coarsekit/criteria.hpp"
#include "coarsekit/roe.hpp"
#include "coarsekit/zoo.hpp"

namespace coarsekit {

inline constexpr const char* kReportSchema = "coarsekit.report/1";
inline constexpr const char* kToolkitVersion = "0.1.0";

nlohmann::json to_json(const Coords& c);
Coords coords_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TowerWitness& w);
nlohmann::json to_json(const PairFamilyWitness& w);
nlohmann::json to_json(const SplitWitness& w);
TowerWitness tower_witness_from_json(const nlohmann::json& j);
PairFamilyWitness pair_witness_from_json(const nlohmann::json& j);
SplitWitness split_witness_from_json(const nlohmann::json& j);

/// [[row, col, num, den], ...] with ids into the window; num/den are strings when
/// they do not fit in 64 bits.
nlohmann::json to_json(const BandOperator& a);
BandOperator band_operator_from_json(const Window& w, const nlohmann::json& j);

struct ReportHeader {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  const SpaceSpec* spec = nullptr;
  const Window* window = nullptr;
};

/// Assembles the common report envelope. Keys are emitted sorted.
nlohmann::json make_report(const ReportHeader& h, Epistemic tag, nlohmann::json results,
                           nlohmann::json witnesses = nlohmann::json::object(), std::string note = "");

}  // namespace coarsekit
