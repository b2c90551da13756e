#include <algorithm>
#include <numeric>

#include "coarsekit/criteria.hpp"

namespace coarsekit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Distance set_diameter(const Window& w, const PointSet& s) {
  Distance best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::max(best, w.distance(s[i], s[j]));
  }
  return best;
}

void check_scale(const Window& w, Distance r, Distance margin) {
  if (r < 0 || margin < 0) throw UsageError("chain components: r and margin must be >= 0");
  if (r > w.horizon()) throw UsageError("chain components: r exceeds the window horizon");
}

PointSet beyond(const Window& w, Distance rho) {
  PointSet out;
  for (PointId p = 0; p < w.size(); ++p) {
    if (w.depth(p) > rho) out.push_back(p);
  }
  return out;
}

ComponentDecomposition punctured(const Window& w, Distance r, Distance rho, Distance margin) {
  check_scale(w, r, margin);
  if (rho < 0) throw UsageError("ends: rho must be >= 0");
  if (rho + r >= w.horizon() - margin) {
    throw UsageError("ends: requires rho + r < H - margin (rho=" + std::to_string(rho) + ", r=" + std::to_string(r) +
                     ", margin=" + std::to_string(margin) + ", H=" + std::to_string(w.horizon()) + ")");
  }
  return chain_components(w, beyond(w, rho), r, margin, false);
}

}  // namespace

ComponentDecomposition chain_components(const Window& w, const PointSet& region, Distance r, Distance margin,
                                        bool with_diameters) {
  check_scale(w, r, margin);
  std::vector<std::int64_t> slot(w.size(), -1);
  for (std::size_t i = 0; i < region.size(); ++i) slot[region[i]] = static_cast<std::int64_t>(i);
  UnionFind uf(region.size());
  for (std::size_t i = 0; i < region.size(); ++i) {
    for (PointId y : w.ball(region[i], r)) {
      if (slot[y] >= 0) uf.unite(i, static_cast<std::size_t>(slot[y]));
    }
  }

  ComponentDecomposition out;
  out.r = r;
  out.margin = margin;
  std::vector<std::int64_t> component_of(region.size(), -1);
  for (std::size_t i = 0; i < region.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<std::int64_t>(out.components.size());
      out.components.emplace_back();
    }
    Component& c = out.components[static_cast<std::size_t>(component_of[root])];
    c.points.push_back(region[i]);
    if (w.depth(region[i]) >= w.horizon() - margin) c.horizon_touching = true;
  }
  // Components were opened in order of their smallest region index; re-sort by smallest id.
  for (auto& c : out.components) std::sort(c.points.begin(), c.points.end());
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) { return a.points.front() < b.points.front(); });
  if (with_diameters) {
    for (auto& c : out.components) c.diameter = set_diameter(w, c.points);
  }
  return out;
}

std::vector<Asdim0Entry> asdim0_profile(const Window& w, const std::vector<Distance>& scales,
                                        std::optional<Distance> margin) {
  std::vector<Asdim0Entry> out;
  const PointSet everything = w.all();
  for (Distance r : scales) {
    if (r < 1) throw UsageError("asdim0_profile: scales must be >= 1");
    const Distance m = margin.value_or(r + 1);
    auto dec = chain_components(w, everything, r, m, false);
    Asdim0Entry e;
    e.r = r;
    e.components = dec.components.size();
    for (const auto& c : dec.components) {
      if (c.horizon_touching) {
        if (w.depth(c.points.front()) <= w.horizon() / 2) e.unbounded_at_window = true;
        continue;
      }
      const Distance d = set_diameter(w, c.points);
      e.max_interior_diameter = std::max(e.max_interior_diameter.value_or(0), d);
    }
    out.push_back(e);
  }
  return out;
}

EndsReport ends_report(const Window& w, Distance r, Distance rho, std::optional<Distance> margin) {
  EndsReport rep;
  rep.r = r;
  rep.rho = rho;
  rep.margin = margin.value_or(r + 1);
  auto dec = punctured(w, r, rho, rep.margin);
  for (auto& c : dec.components) {
    (c.horizon_touching ? rep.touching : rep.bounded).push_back(std::move(c.points));
  }
  rep.count = rep.touching.size();
  return rep;
}

std::optional<SplitWitness> split_witness(const Window& w, Distance r, Distance rho, std::optional<Distance> margin) {
  const EndsReport rep = ends_report(w, r, rho, margin);
  if (rep.count < 2) return std::nullopt;
  SplitWitness wit;
  wit.r = r;
  wit.rho = rho;
  wit.margin = rep.margin;
  PointSet b;
  for (std::size_t i = 1; i < rep.touching.size(); ++i) b.insert(b.end(), rep.touching[i].begin(), rep.touching[i].end());
  for (const auto& c : rep.bounded) b.insert(b.end(), c.begin(), c.end());
  std::sort(b.begin(), b.end());
  for (PointId p : rep.touching.front()) wit.a.push_back(w.coords(p));
  for (PointId p : b) wit.b.push_back(w.coords(p));
  return wit;
}

}  // namespace coarsekit
