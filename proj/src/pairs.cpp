#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "coarsekit/criteria.hpp"

namespace coarsekit {

namespace {

using PairIds = std::vector<std::pair<PointId, PointId>>;

PairIds greedy_pairs(const Window& w, Distance r, Distance bound, std::size_t wanted) {
  PairIds out;
  std::vector<char> used(w.size(), 0);
  for (PointId x = 0; x < w.size() && out.size() < wanted; ++x) {
    if (used[x]) continue;
    for (PointId y : w.ball(x, bound)) {
      if (y == x || used[y] || w.distance(x, y) <= r) continue;
      used[x] = used[y] = 1;
      out.emplace_back(x, y);
      break;
    }
  }
  return out;
}

PairIds maximum_pairs(const Window& w, Distance r, Distance bound) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(w.size());
  for (PointId x = 0; x < w.size(); ++x) {
    for (PointId y : w.ball(x, bound)) {
      if (y > x && w.distance(x, y) > r) boost::add_edge(x, y, g);
    }
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(w.size());
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  PairIds out;
  const auto none = boost::graph_traits<Graph>::null_vertex();
  for (PointId x = 0; x < w.size(); ++x) {
    if (mate[x] != none && mate[x] > x) out.emplace_back(x, static_cast<PointId>(mate[x]));
  }
  return out;
}

}  // namespace

PairSearchResult detect_m32(const Window& w, const std::vector<Distance>& scales, Distance bound,
                            std::size_t pairs) {
  if (scales.empty()) throw UsageError("detect_m32: no scales given");
  if (pairs < 1) throw UsageError("detect_m32: N must be >= 1");
  for (Distance r : scales) {
    if (r < 0 || r >= bound) throw UsageError("detect_m32: every scale must satisfy 0 <= r < B");
  }
  PairSearchResult result;
  bool all = true;
  for (Distance r : scales) {
    PairScaleOutcome outcome;
    outcome.scale = r;
    PairIds found = greedy_pairs(w, r, bound, pairs);
    if (found.size() < pairs) {
      PairIds best = maximum_pairs(w, r, bound);
      outcome.max_disjoint_pairs = best.size();
      if (best.size() >= pairs) {
        best.resize(pairs);
        found = std::move(best);
      }
    }
    if (found.size() >= pairs) {
      PairFamily fam{r, bound, {}};
      for (const auto& [x, y] : found) fam.pairs.emplace_back(w.coords(x), w.coords(y));
      outcome.max_disjoint_pairs = std::max(outcome.max_disjoint_pairs, found.size());
      outcome.family = std::move(fam);
    } else {
      all = false;
    }
    result.scales.push_back(std::move(outcome));
  }
  if (all) {
    PairFamilyWitness wit;
    for (const auto& o : result.scales) wit.families.push_back(*o.family);
    result.witness = std::move(wit);
  }
  return result;
}

}  // namespace coarsekit
