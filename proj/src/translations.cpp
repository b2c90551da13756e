#include "coarsekit/translations.hpp"

#include <algorithm>
#include <map>

namespace coarsekit {

PartialTranslation PartialTranslation::from_graph(const Window& w, std::vector<Arrow> graph) {
  std::sort(graph.begin(), graph.end());
  graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
  std::vector<PointId> targets;
  targets.reserve(graph.size());
  Distance disp = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto [x, y] = graph[i];
    if (x >= w.size() || y >= w.size()) throw UsageError("partial translation: point outside window");
    if (i > 0 && graph[i - 1].first == x) throw UsageError("partial translation: not a function");
    targets.push_back(y);
    disp = std::max(disp, w.distance(x, y));
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
    throw UsageError("partial translation: not injective");
  }
  return PartialTranslation(std::move(graph), disp);
}

PartialTranslation PartialTranslation::identity(const PointSet& domain) {
  std::vector<Arrow> graph;
  graph.reserve(domain.size());
  for (PointId x : domain) graph.emplace_back(x, x);
  return PartialTranslation(std::move(graph), 0);
}

std::optional<PointId> PartialTranslation::operator()(PointId x) const {
  auto it = std::lower_bound(graph_.begin(), graph_.end(), Arrow{x, 0});
  if (it == graph_.end() || it->first != x) return std::nullopt;
  return it->second;
}

PointSet PartialTranslation::domain() const {
  PointSet out;
  out.reserve(graph_.size());
  for (const auto& [x, y] : graph_) out.push_back(x);
  return out;
}

PointSet PartialTranslation::image() const {
  std::vector<PointId> out;
  out.reserve(graph_.size());
  for (const auto& [x, y] : graph_) out.push_back(y);
  return make_point_set(std::move(out));
}

PartialTranslation compose(const Window& w, const PartialTranslation& f, const PartialTranslation& g) {
  std::vector<Arrow> graph;
  for (const auto& [x, y] : g.graph()) {
    if (auto z = f(y)) graph.emplace_back(x, *z);
  }
  return PartialTranslation::from_graph(w, std::move(graph));
}

PartialTranslation invert(const PartialTranslation& f) {
  std::vector<Arrow> graph;
  graph.reserve(f.size());
  for (const auto& [x, y] : f.graph()) graph.emplace_back(y, x);
  std::sort(graph.begin(), graph.end());
  return PartialTranslation(std::move(graph), f.displacement());
}

PointSet apply(const PartialTranslation& f, const PointSet& a) {
  std::vector<PointId> out;
  for (PointId x : a) {
    if (auto y = f(x)) out.push_back(*y);
  }
  return make_point_set(std::move(out));
}

PointSet fixed_points(const PartialTranslation& f) {
  PointSet out;
  for (const auto& [x, y] : f.graph()) {
    if (x == y) out.push_back(x);
  }
  return out;
}

BoundedRelation relation_at(const Window& w, Distance n) {
  if (n < 0 || n > w.horizon()) throw UsageError("relation_at: n must lie in [0, horizon]");
  BoundedRelation rel;
  rel.bound = n;
  for (PointId x : w.interior(n)) {
    for (PointId y : w.ball(x, n)) {
      if (w.in_interior(y, n)) rel.pairs.emplace_back(x, y);
    }
  }
  std::sort(rel.pairs.begin(), rel.pairs.end());
  return rel;
}

std::size_t max_degree(const BoundedRelation& rel) {
  std::map<PointId, std::size_t> out_deg, in_deg;
  std::size_t best = 0;
  for (const auto& [x, y] : rel.pairs) {
    best = std::max({best, ++out_deg[x], ++in_deg[y]});
  }
  return best;
}

std::vector<PartialTranslation> decompose(const Window& w, const BoundedRelation& rel) {
  for (const auto& [x, y] : rel.pairs) {
    if (w.distance(x, y) > rel.bound) throw UsageError("decompose: pair exceeds the relation bound");
  }
  const std::size_t colors = max_degree(rel);
  if (colors == 0) return {};

  // Local vertex numbering on both sides of the bipartite graph.
  std::map<PointId, std::size_t> left_ix, right_ix;
  for (const auto& [x, y] : rel.pairs) {
    left_ix.emplace(x, left_ix.size());
    right_ix.emplace(y, right_ix.size());
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // at_left[u][c] = right vertex joined to u by color c; at_right likewise.
  std::vector<std::vector<std::size_t>> at_left(left_ix.size(), std::vector<std::size_t>(colors, kNone));
  std::vector<std::vector<std::size_t>> at_right(right_ix.size(), std::vector<std::size_t>(colors, kNone));
  auto free_color = [&](const std::vector<std::size_t>& slots) {
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), kNone) - slots.begin());
  };

  for (const auto& [x, y] : rel.pairs) {
    const std::size_t u = left_ix.at(x), v = right_ix.at(y);
    const std::size_t a = free_color(at_left[u]);
    const std::size_t b = free_color(at_right[v]);
    if (at_right[v][a] != kNone) {
      // Swap colors a and b along the alternating path leaving v on color a.
      // By bipartiteness the path never reaches u, so afterwards a is free at v.
      std::vector<std::pair<std::size_t, std::size_t>> path;  // (left, right) edges
      std::size_t right = v;
      std::size_t c = a;
      while (true) {
        std::size_t left = at_right[right][c];
        if (left == kNone) break;
        path.emplace_back(left, right);
        c = (c == a) ? b : a;
        std::size_t next = at_left[left][c];
        if (next == kNone) break;
        path.emplace_back(left, next);
        right = next;
        c = (c == a) ? b : a;
      }
      std::vector<std::size_t> old_color(path.size());
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto [l, r] = path[i];
        old_color[i] = (at_left[l][a] == r) ? a : b;
        at_left[l][old_color[i]] = kNone;
        at_right[r][old_color[i]] = kNone;
      }
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto [l, r] = path[i];
        const std::size_t nc = old_color[i] == a ? b : a;
        at_left[l][nc] = r;
        at_right[r][nc] = l;
      }
    }
    at_left[u][a] = v;
    at_right[v][a] = u;
  }

  std::vector<PointId> left_pt(left_ix.size()), right_pt(right_ix.size());
  for (const auto& [p, i] : left_ix) left_pt[i] = p;
  for (const auto& [p, i] : right_ix) right_pt[i] = p;
  std::vector<std::vector<Arrow>> parts(colors);
  for (std::size_t u = 0; u < at_left.size(); ++u) {
    for (std::size_t c = 0; c < colors; ++c) {
      if (at_left[u][c] != kNone) parts[c].emplace_back(left_pt[u], right_pt[at_left[u][c]]);
    }
  }
  std::vector<PartialTranslation> out;
  for (auto& p : parts) {
    if (!p.empty()) out.push_back(PartialTranslation::from_graph(w, std::move(p)));
  }
  return out;
}

PartialTranslation random_translation(const Window& w, std::mt19937_64& rng, Distance max_displacement) {
  std::vector<PointId> order(w.size());
  for (PointId i = 0; i < w.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  std::vector<char> taken(w.size(), 0);
  std::vector<Arrow> graph;
  for (PointId x : order) {
    if (rng() % 2) continue;
    std::vector<PointId> free;
    for (PointId y : w.ball(x, max_displacement)) {
      if (!taken[y]) free.push_back(y);
    }
    if (free.empty()) continue;
    const PointId y = free[rng() % free.size()];
    taken[y] = 1;
    graph.emplace_back(x, y);
  }
  return PartialTranslation::from_graph(w, std::move(graph));
}

}  // namespace coarsekit
