#include <algorithm>

#include "coarsekit/criteria.hpp"

namespace coarsekit {

std::vector<LevelBound> tower_bounds(const TowerParams& p) {
  if (p.levels < 1 || p.towers < 1) throw UsageError("detect_m2: J and N must be >= 1");
  if (p.s0 < 1 || p.c < 1) throw UsageError("detect_m2: s0 and c must be >= 1");
  if (p.levels > 40) throw UsageError("detect_m2: J too large");
  std::vector<LevelBound> out;
  for (int j = 2; j <= p.levels; ++j) {
    Distance lower, upper;
    if (__builtin_mul_overflow(p.s0, Distance{1} << (j - 1), &lower) ||
        __builtin_mul_overflow(p.c, lower, &upper)) {
      throw UsageError("detect_m2: level bounds overflow");
    }
    out.push_back({lower, upper});
  }
  return out;
}

namespace {

class TowerSearch {
 public:
  TowerSearch(const Window& w, const TowerParams& p, std::vector<LevelBound> bounds)
      : w_(w), p_(p), bounds_(std::move(bounds)), used_(w.size(), 0) {}

  TowerSearchResult run() {
    const Distance reach = bounds_.empty() ? 0 : bounds_.back().upper;
    std::vector<char> in_union(w_.size(), 0);
    for (PointId b = 0; b < w_.size(); ++b) {
      std::vector<PointSet> levels(bounds_.size());
      if (!bounds_.empty()) {
        for (PointId y : w_.ball(b, reach)) {
          const Distance d = w_.distance(b, y);
          for (std::size_t j = 0; j < bounds_.size(); ++j) {
            if (d >= bounds_[j].lower && d <= bounds_[j].upper) levels[j].push_back(y);
          }
        }
      }
      if (std::any_of(levels.begin(), levels.end(), [](const PointSet& l) { return l.empty(); })) continue;
      in_union[b] = 1;
      for (const auto& l : levels) {
        for (PointId y : l) in_union[y] = 1;
      }
      bases_.push_back(b);
      candidates_.push_back(std::move(levels));
    }
    universe_ = static_cast<std::size_t>(std::count(in_union.begin(), in_union.end(), 1));

    TowerSearchResult result;
    const std::size_t needed = static_cast<std::size_t>(p_.levels) * static_cast<std::size_t>(p_.towers);
    if (universe_ < needed) {
      result.stats.exhaustive = true;
      result.stats.note = "only " + std::to_string(universe_) + " points occur in candidate towers; " +
                          std::to_string(needed) + " distinct points are required";
      return result;
    }
    const bool found = search(0, p_.towers);
    result.stats.nodes = nodes_;
    result.stats.exhaustive = found || !budget_hit_;
    if (found) {
      TowerWitness wit;
      wit.levels = p_.levels;
      wit.bounds = bounds_;
      for (const auto& t : chosen_) {
        std::vector<Coords> tower;
        for (PointId y : t) tower.push_back(w_.coords(y));
        wit.towers.push_back(std::move(tower));
      }
      result.witness = std::move(wit);
    } else {
      result.stats.note = budget_hit_ ? "node budget exhausted before the search completed"
                                      : "exhaustive search over " + std::to_string(bases_.size()) +
                                            " viable bases found no disjoint tower family";
    }
    return result;
  }

 private:
  bool search(std::size_t first_base, int remaining) {
    if (remaining == 0) return true;
    if (budget_hit_) return false;
    if (universe_ - used_count_ < static_cast<std::size_t>(remaining) * static_cast<std::size_t>(p_.levels)) {
      return false;
    }
    for (std::size_t i = first_base; i < bases_.size(); ++i) {
      if (bases_.size() - i < static_cast<std::size_t>(remaining)) return false;
      const PointId b = bases_[i];
      if (used_[b]) continue;
      take(b);
      current_.assign(1, b);
      if (fill_level(i, 0, remaining)) return true;
      release(b);
      if (budget_hit_) return false;
    }
    return false;
  }

  bool fill_level(std::size_t base_index, std::size_t level, int remaining) {
    if (++nodes_ > p_.node_budget) {
      budget_hit_ = true;
      return false;
    }
    if (level == bounds_.size()) {
      chosen_.push_back(current_);
      const auto saved = current_;
      if (search(base_index + 1, remaining - 1)) return true;
      current_ = saved;
      chosen_.pop_back();
      return false;
    }
    for (PointId y : candidates_[base_index][level]) {
      if (used_[y]) continue;
      take(y);
      current_.push_back(y);
      if (fill_level(base_index, level + 1, remaining)) return true;
      current_.pop_back();
      release(y);
      if (budget_hit_) return false;
    }
    return false;
  }

  void take(PointId p) {
    used_[p] = 1;
    ++used_count_;
  }
  void release(PointId p) {
    used_[p] = 0;
    --used_count_;
  }

  const Window& w_;
  const TowerParams& p_;
  std::vector<LevelBound> bounds_;
  std::vector<PointId> bases_;
  std::vector<std::vector<PointSet>> candidates_;  // per viable base, per level
  std::vector<char> used_;
  std::size_t used_count_ = 0;
  std::size_t universe_ = 0;
  std::vector<PointId> current_;
  std::vector<std::vector<PointId>> chosen_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

TowerSearchResult detect_m2(const Window& w, const TowerParams& p) {
  auto bounds = tower_bounds(p);
  if (!bounds.empty() && bounds.back().upper > w.horizon()) {
    throw UsageError("detect_m2: top level bound " + std::to_string(bounds.back().upper) +
                     " exceeds the window horizon " + std::to_string(w.horizon()));
  }
  return TowerSearch(w, p, std::move(bounds)).run();
}

}  // namespace coarsekit
