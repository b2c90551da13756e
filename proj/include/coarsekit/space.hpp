#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace coarsekit {

using Coord = std::int64_t;
using Coords = std::vector<Coord>;
using Distance = std::int64_t;
using PointId = std::uint32_t;

/// Sorted, duplicate-free list of window point ids.
using PointSet = std::vector<PointId>;

/// Raised on misuse of an API: bad parameters, mismatched spaces.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold on the input data.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept;
};

/// An exact presentation of a uniformly locally finite metric space.
///
/// Implementations provide an integer distance oracle and an enumerator of
/// ambient balls. Both are exact: nothing is truncated to a window.
class SpacePresentation {
 public:
  virtual ~SpacePresentation() = default;

  virtual std::string kind() const = 0;
  virtual Coords basepoint() const = 0;
  virtual bool contains(const Coords& p) const = 0;

  /// Exact ambient distance. Callers are expected to pass members of the space.
  virtual Distance distance(const Coords& a, const Coords& b) const = 0;

  /// All ambient points y with distance(center, y) <= r, in no particular order.
  virtual std::vector<Coords> ball(const Coords& center, Distance r) const = 0;

  virtual std::string label(const Coords& p) const;
};

using SpacePtr = std::shared_ptr<const SpacePresentation>;

/// Checked distance accessor: both points must belong to `space`.
Distance distance(const SpacePresentation& space, const Coords& x, const Coords& y);

struct Point {
  PointId id = 0;
  Coords coords;
};

/// The exact metric ball N_H(basepoint) of a space, enumerated in canonical order
/// (by distance from the basepoint, then lexicographically by coordinates).
///
/// A criterion evaluated at radius r only trusts points of interior(r), the points at
/// depth <= H - r, whose r-balls lie inside the window.
class Window {
 public:
  Window(SpacePtr space, Distance horizon);

  const SpacePresentation& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  Distance horizon() const { return horizon_; }
  std::size_t size() const { return points_.size(); }

  std::span<const Point> points() const { return points_; }
  const Point& point(PointId id) const { return points_.at(id); }
  const Coords& coords(PointId id) const { return points_.at(id).coords; }
  std::optional<PointId> find(const Coords& c) const;

  PointId basepoint() const { return 0; }
  Distance depth(PointId id) const { return depth_.at(id); }
  Distance distance(PointId a, PointId b) const;

  /// Window points within distance r of `center`.
  PointSet ball(PointId center, Distance r) const;

  bool in_interior(PointId id, Distance margin) const { return depth_.at(id) <= horizon_ - margin; }
  PointSet interior(Distance margin) const;
  PointSet all() const;

  std::string label(PointId id) const { return space_->label(coords(id)); }

 private:
  SpacePtr space_;
  Distance horizon_;
  std::vector<Point> points_;
  std::vector<Distance> depth_;
  std::unordered_map<Coords, PointId, CoordsHash> index_;
};

/// Normalizes an arbitrary id list into a PointSet.
PointSet make_point_set(std::vector<PointId> ids);

/// {x in window : d(x, A) <= r}.
PointSet neighborhood(const Window& w, const PointSet& a, Distance r);

struct Partition {
  std::vector<PointSet> classes;
  Distance separation = 0;
};

/// Greedy coloring of the r-proximity graph in canonical point order.
/// Each class is r-separated: distinct members are at distance > r.
Partition separated_partition(const Window& w, Distance r);

/// r -> max |N_r(x)| over x in interior(r), for r = 0..rmax.
std::map<Distance, std::size_t> ulf_profile(const Window& w, Distance rmax);

struct MetricViolation {
  enum class Kind { Negative, Asymmetric, Identity, Triangle };
  Kind kind;
  std::vector<PointId> points;  // pair or triple, as sampled
  std::string describe(const Window& w) const;
};

struct MetricReport {
  std::size_t samples = 0;
  std::vector<MetricViolation> violations;  // distinct by (kind, points)
  bool ok() const { return violations.empty(); }
};

/// Samples `sample_count` triples with a fixed seed and checks the metric axioms.
MetricReport check_metric(const Window& w, std::size_t sample_count, std::uint64_t seed = 0x5eed);

std::string to_string(MetricViolation::Kind k);

}  // namespace coarsekit
