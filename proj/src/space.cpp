#include "coarsekit/space.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace coarsekit {

std::size_t CoordsHash::operator()(const Coords& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ c.size();
  for (Coord v : c) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string SpacePresentation::label(const Coords& p) const {
  std::ostringstream os;
  if (p.size() == 1) {
    os << p[0];
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

Distance distance(const SpacePresentation& space, const Coords& x, const Coords& y) {
  if (!space.contains(x) || !space.contains(y)) {
    throw UsageError("distance: point " + space.label(space.contains(x) ? y : x) +
                     " does not belong to space '" + space.kind() + "'");
  }
  return space.distance(x, y);
}

Window::Window(SpacePtr space, Distance horizon) : space_(std::move(space)), horizon_(horizon) {
  if (!space_) throw UsageError("window: null space");
  if (horizon_ < 0) throw UsageError("window: negative horizon");
  const Coords base = space_->basepoint();
  std::vector<std::pair<Distance, Coords>> found;
  for (auto& c : space_->ball(base, horizon_)) {
    found.emplace_back(space_->distance(base, c), std::move(c));
  }
  std::sort(found.begin(), found.end());
  points_.reserve(found.size());
  depth_.reserve(found.size());
  index_.reserve(found.size() * 2);
  for (auto& [d, c] : found) {
    const auto id = static_cast<PointId>(points_.size());
    if (!index_.emplace(c, id).second) {
      throw std::logic_error("window: ball enumerator produced a duplicate point " + space_->label(c));
    }
    depth_.push_back(d);
    points_.push_back(Point{id, std::move(c)});
  }
  if (points_.empty() || depth_.front() != 0) {
    throw std::logic_error("window: basepoint missing from its own ball");
  }
}

std::optional<PointId> Window::find(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Distance Window::distance(PointId a, PointId b) const {
  return space_->distance(points_.at(a).coords, points_.at(b).coords);
}

PointSet Window::ball(PointId center, Distance r) const {
  PointSet out;
  for (const auto& c : space_->ball(points_.at(center).coords, r)) {
    if (auto id = find(c)) out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet Window::interior(Distance margin) const {
  PointSet out;
  for (PointId i = 0; i < points_.size(); ++i) {
    if (in_interior(i, margin)) out.push_back(i);
  }
  return out;
}

PointSet Window::all() const {
  PointSet out(points_.size());
  for (PointId i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

PointSet make_point_set(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

PointSet neighborhood(const Window& w, const PointSet& a, Distance r) {
  if (r < 0) throw UsageError("neighborhood: negative radius");
  std::vector<char> mark(w.size(), 0);
  for (PointId x : a) {
    for (PointId y : w.ball(x, r)) mark[y] = 1;
  }
  PointSet out;
  for (PointId i = 0; i < mark.size(); ++i) {
    if (mark[i]) out.push_back(i);
  }
  return out;
}

Partition separated_partition(const Window& w, Distance r) {
  if (r < 1) throw UsageError("separated_partition: r must be >= 1");
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(w.size(), kUncolored);
  Partition part;
  part.separation = r;
  std::vector<char> taken;
  for (PointId x = 0; x < w.size(); ++x) {
    taken.assign(part.classes.size() + 1, 0);
    for (PointId y : w.ball(x, r)) {
      if (color[y] != kUncolored) taken[color[y]] = 1;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[x] = c;
    if (c == part.classes.size()) part.classes.emplace_back();
    part.classes[c].push_back(x);
  }
  return part;
}

std::map<Distance, std::size_t> ulf_profile(const Window& w, Distance rmax) {
  if (rmax < 0 || rmax > w.horizon()) {
    throw UsageError("ulf_profile: rmax must lie in [0, horizon]");
  }
  std::map<Distance, std::size_t> profile;
  for (Distance r = 0; r <= rmax; ++r) {
    std::size_t best = 0;
    for (PointId x : w.interior(r)) best = std::max(best, w.ball(x, r).size());
    profile[r] = best;
  }
  return profile;
}

std::string to_string(MetricViolation::Kind k) {
  switch (k) {
    case MetricViolation::Kind::Negative: return "negative";
    case MetricViolation::Kind::Asymmetric: return "asymmetric";
    case MetricViolation::Kind::Identity: return "identity";
    case MetricViolation::Kind::Triangle: return "triangle";
  }
  return "unknown";
}

std::string MetricViolation::describe(const Window& w) const {
  std::ostringstream os;
  os << to_string(kind) << ':';
  for (PointId p : points) os << ' ' << w.label(p);
  return os.str();
}

MetricReport check_metric(const Window& w, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw UsageError("check_metric: sample_count must be >= 1");
  using Kind = MetricViolation::Kind;
  MetricReport report;
  report.samples = sample_count;
  std::set<std::pair<Kind, std::vector<PointId>>> seen;
  auto record = [&](Kind k, std::vector<PointId> pts) {
    if (k != Kind::Triangle) std::sort(pts.begin(), pts.end());
    if (seen.emplace(k, pts).second) report.violations.push_back({k, std::move(pts)});
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(w.size() - 1));
  for (std::size_t s = 0; s < sample_count; ++s) {
    const PointId x = pick(rng), y = pick(rng), z = pick(rng);
    const std::pair<PointId, PointId> pairs[] = {{x, y}, {y, z}, {x, z}};
    bool negative = false;
    for (auto [p, q] : pairs) {
      const Distance dpq = w.distance(p, q), dqp = w.distance(q, p);
      if (dpq < 0 || dqp < 0) {
        record(Kind::Negative, {p, q});
        negative = true;
        continue;
      }
      if (dpq != dqp) record(Kind::Asymmetric, {p, q});
      if ((dpq == 0) != (p == q)) record(Kind::Identity, {p, q});
    }
    if (negative) continue;
    for (PointId p : {x, y, z}) {
      if (w.distance(p, p) != 0) record(Kind::Identity, {p, p});
    }
    if (w.distance(x, z) > w.distance(x, y) + w.distance(y, z)) record(Kind::Triangle, {x, y, z});
  }
  return report;
}

}  // namespace coarsekit
