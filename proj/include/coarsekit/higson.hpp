#pragma once

#include <map>
#include <vector>

#include "coarsekit/rational.hpp"
#include "coarsekit/space.hpp"

namespace coarsekit {

/// A function on the window with exact rational values, indexed by PointId.
struct HigsonFunction {
  std::vector<Rational> values;
  std::map<int, PointSet> blocks;   // A_n, for functions built from separated sets
  PointSet selected;                // union of the even blocks A_{2n}
  std::vector<int> summand;         // n of the nonzero summand at each point, 0 if none
};

/// h = sum over n of max(1 - d(x, A_{2n}) / n, 0), where the blocks A_n are drawn
/// from `a` in canonical order subject to d(A_n, B) >= n and d(A_n, A_m) > 2n for m <= n - 2.
/// Throws PreconditionError when d(x, B) decreases along `a`.
HigsonFunction higson_from_separated(const Window& w, const PointSet& a, const PointSet& b);

HigsonFunction higson_max(const HigsonFunction& f, const HigsonFunction& g);

struct VariationReport {
  Rational epsilon;
  Distance r = 0;
  std::vector<std::pair<PointId, PointId>> violators;  // x < y, d <= r, |h(x) - h(y)| > epsilon
  Distance enclosing_radius = 0;                       // R0: max depth over violating points
  Rational sup_variation;                              // over all examined pairs
};

/// Examines every pair within distance r having an endpoint in interior(r).
VariationReport variation_report(const Window& w, const std::vector<Rational>& h, const Rational& epsilon, Distance r);

}  // namespace coarsekit
