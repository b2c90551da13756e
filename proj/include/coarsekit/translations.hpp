#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "coarsekit/space.hpp"

namespace coarsekit {

using Arrow = std::pair<PointId, PointId>;  // (x, f(x))

/// A finite partial bijection between window points with its exact displacement
/// max_{x in dom} d(x, f(x)). The graph is kept sorted by source point.
class PartialTranslation {
 public:
  PartialTranslation() = default;

  /// Validates injectivity and computes the displacement from window distances.
  static PartialTranslation from_graph(const Window& w, std::vector<Arrow> graph);
  static PartialTranslation identity(const PointSet& domain);

  const std::vector<Arrow>& graph() const { return graph_; }
  Distance displacement() const { return displacement_; }
  std::size_t size() const { return graph_.size(); }
  bool empty() const { return graph_.empty(); }

  std::optional<PointId> operator()(PointId x) const;
  PointSet domain() const;
  PointSet image() const;

  bool operator==(const PartialTranslation&) const = default;

 private:
  PartialTranslation(std::vector<Arrow> graph, Distance displacement)
      : graph_(std::move(graph)), displacement_(displacement) {}

  std::vector<Arrow> graph_;
  Distance displacement_ = 0;

  friend PartialTranslation invert(const PartialTranslation& f);
};

/// f o g, defined on g^-1(im(g) ∩ dom(f)).
PartialTranslation compose(const Window& w, const PartialTranslation& f, const PartialTranslation& g);
PartialTranslation invert(const PartialTranslation& f);

/// f(A ∩ dom f).
PointSet apply(const PartialTranslation& f, const PointSet& a);

/// {x in dom f : f(x) = x}.
PointSet fixed_points(const PartialTranslation& f);

/// Ordered pairs (x, y) with d(x, y) <= bound.
struct BoundedRelation {
  std::vector<Arrow> pairs;  // sorted, unique
  Distance bound = 0;
};

/// E(n) restricted to interior(n): all ordered pairs at distance <= n.
BoundedRelation relation_at(const Window& w, Distance n);

/// Largest in- or out-degree of the relation.
std::size_t max_degree(const BoundedRelation& rel);

/// Splits the relation into at most max_degree(rel) partial translations whose
/// graphs partition rel.pairs. This is a proper edge coloring of the relation as
/// a bipartite graph, built with Kőnig's alternating-path recoloring.
std::vector<PartialTranslation> decompose(const Window& w, const BoundedRelation& rel);

/// A random partial translation with displacement <= max_displacement: points are
/// visited in shuffled order and each, with probability 1/2, is sent to a random
/// unused target in its ball.
PartialTranslation random_translation(const Window& w, std::mt19937_64& rng, Distance max_displacement);

}  // namespace coarsekit
