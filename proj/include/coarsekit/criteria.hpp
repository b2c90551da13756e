#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarsekit/space.hpp"

namespace coarsekit {

/// How much a finite result says about the infinite space.
///   Certificate       finite evidence, re-checkable by an independent checker
///   NoWitnessAtScale  the search at these parameters found nothing; not a proof
///   Profile           measured window values
enum class Epistemic { Certificate, NoWitnessAtScale, Profile };
std::string to_string(Epistemic e);

// ---------------------------------------------------------------------------
// Separation profile s_r(x) = d(N_r(x), X \ N_r(x)).

struct SeparationValue {
  enum class Status {
    Exact,          // every ambient point that could beat the value lies in the window
    UpperBound,     // window value; the ambient value is <= this
    ExceedsWindow,  // the window holds no point outside N_r(x)
  };
  PointId point = 0;
  Distance value = 0;  // meaningless when ExceedsWindow
  Status status = Status::Exact;
};

struct SeparationProfile {
  Distance r = 0;
  std::vector<SeparationValue> values;  // one per point of interior(2r), canonical order
};

std::string to_string(SeparationValue::Status s);

SeparationProfile separation_profile(const Window& w, Distance r);

struct DivergenceReport {
  enum class Trend { Diverging, Bounded, Mixed };
  Distance r = 0;
  std::vector<std::pair<Distance, Distance>> annuli;  // [lo, hi) by depth
  std::vector<Distance> minima;                       // min s_r per nonempty annulus
  Trend trend = Trend::Mixed;
  Distance cap = 0;  // largest minimum before the last annulus
};

std::string to_string(DivergenceReport::Trend t);

/// Splits the profile's depth range [0, H - 2r] into `annuli` equal bands and
/// classifies the per-band minima: Diverging when strictly increasing, Bounded
/// when the last band re-attains a value <= the cap set by earlier bands, Mixed
/// otherwise.
DivergenceReport divergence_report(const Window& w, const SeparationProfile& profile, std::size_t annuli);

// ---------------------------------------------------------------------------
// M_2 towers.

struct LevelBound {
  Distance lower = 0;
  Distance upper = 0;
};

struct TowerParams {
  int levels = 4;  // J
  int towers = 6;  // N
  Distance s0 = 2;
  Distance c = 4;
  std::uint64_t node_budget = 2'000'000;
};

/// Level bounds for j = 2..J: S_j = s0 * 2^(j-1), B_j = c * S_j.
std::vector<LevelBound> tower_bounds(const TowerParams& p);

/// N disjoint tuples (y_1, ..., y_J) with S_j <= d(y_1, y_j) <= B_j for j >= 2.
struct TowerWitness {
  int levels = 0;
  std::vector<LevelBound> bounds;           // levels - 1 entries, for j = 2..J
  std::vector<std::vector<Coords>> towers;  // each of length `levels`
};

struct SearchStats {
  bool exhaustive = false;  // false when the node budget ran out
  std::uint64_t nodes = 0;
  std::string note;
};

struct TowerSearchResult {
  std::optional<TowerWitness> witness;
  SearchStats stats;
};

/// Backtracking search over per-base candidate towers, bases in canonical order.
TowerSearchResult detect_m2(const Window& w, const TowerParams& p);

// ---------------------------------------------------------------------------
// M_{3/2} pair families.

struct PairFamily {
  Distance scale = 0;  // r: pairs satisfy r < d <= bound
  Distance bound = 0;
  std::vector<std::pair<Coords, Coords>> pairs;
};

struct PairFamilyWitness {
  std::vector<PairFamily> families;
};

struct PairScaleOutcome {
  Distance scale = 0;
  std::optional<PairFamily> family;
  std::size_t max_disjoint_pairs = 0;  // exact maximum matching size when no family was found
};

struct PairSearchResult {
  std::vector<PairScaleOutcome> scales;
  std::optional<PairFamilyWitness> witness;  // present iff every scale succeeded
};

PairSearchResult detect_m32(const Window& w, const std::vector<Distance>& scales, Distance bound,
                            std::size_t pairs);

// ---------------------------------------------------------------------------
// Chain components.

struct Component {
  PointSet points;
  Distance diameter = 0;
  bool horizon_touching = false;
};

struct ComponentDecomposition {
  Distance r = 0;
  Distance margin = 0;
  std::vector<Component> components;  // ordered by smallest member
};

/// r-chain components of `region` (chains may only pass through `region`).
/// A component is horizon-touching when it has a point at depth >= H - margin.
ComponentDecomposition chain_components(const Window& w, const PointSet& region, Distance r, Distance margin,
                                        bool with_diameters = true);

struct Asdim0Entry {
  Distance r = 0;
  std::optional<Distance> max_interior_diameter;  // over non-touching components
  bool unbounded_at_window = false;  // a horizon-touching component reaches depth <= H/2
  std::size_t components = 0;
};

std::vector<Asdim0Entry> asdim0_profile(const Window& w, const std::vector<Distance>& scales,
                                        std::optional<Distance> margin = std::nullopt);

// ---------------------------------------------------------------------------
// Ends and split witnesses.

struct EndsReport {
  Distance r = 0;
  Distance rho = 0;
  Distance margin = 0;
  std::size_t count = 0;               // horizon-touching r-components beyond N_rho(basepoint)
  std::vector<PointSet> touching;      // canonical order
  std::vector<PointSet> bounded;
};

/// Margin defaults to r + 1. Requires rho + r < H - margin.
EndsReport ends_report(const Window& w, Distance r, Distance rho, std::optional<Distance> margin = std::nullopt);

struct SplitWitness {
  Distance r = 0;
  Distance rho = 0;
  Distance margin = 0;
  std::vector<Coords> a;
  std::vector<Coords> b;
};

/// A = the first horizon-touching component, B = everything else beyond N_rho.
std::optional<SplitWitness> split_witness(const Window& w, Distance r, Distance rho,
                                          std::optional<Distance> margin = std::nullopt);

}  // namespace coarsekit
