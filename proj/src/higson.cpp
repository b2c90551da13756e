#include "coarsekit/higson.hpp"

#include <algorithm>
#include <limits>

namespace coarsekit {

namespace {

Distance set_distance(const Window& w, PointId x, const PointSet& s) {
  Distance best = std::numeric_limits<Distance>::max();
  for (PointId y : s) best = std::min(best, w.distance(x, y));
  return best;
}

}  // namespace

HigsonFunction higson_from_separated(const Window& w, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw UsageError("higson: A and B must be nonempty");
  for (PointId p : a) {
    if (p >= w.size()) throw UsageError("higson: point id outside the window");
    if (std::binary_search(b.begin(), b.end(), p)) throw UsageError("higson: A and B intersect");
  }

  std::vector<Distance> to_b;
  for (PointId p : a) to_b.push_back(set_distance(w, p, b));
  std::string offending;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (to_b[i] < to_b[i - 1]) {
      offending += " " + w.label(a[i - 1]) + " (d=" + std::to_string(to_b[i - 1]) + ") before " + w.label(a[i]) +
                   " (d=" + std::to_string(to_b[i]) + ");";
    }
  }
  if (!offending.empty()) {
    throw PreconditionError("higson: d(x, B) is not nondecreasing along A:" + offending);
  }

  HigsonFunction h;
  int current = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto admissible = [&](int n) {
      if (n > 1 && to_b[i] < n) return false;
      for (const auto& [m, block] : h.blocks) {
        if (m > n - 2) break;
        if (set_distance(w, a[i], block) <= 2 * static_cast<Distance>(n)) return false;
      }
      return true;
    };
    const int top = static_cast<int>(std::max<Distance>(current, std::min<Distance>(to_b[i], 1 << 30)));
    for (int n = top; n >= current; --n) {
      if (admissible(n)) {
        h.blocks[n].push_back(a[i]);
        current = n;
        break;
      }
    }
  }

  h.values.assign(w.size(), Rational(0));
  h.summand.assign(w.size(), 0);
  for (const auto& [n, block] : h.blocks) {
    if (n % 2 != 0) continue;
    const int half = n / 2;
    h.selected.insert(h.selected.end(), block.begin(), block.end());
    for (PointId x = 0; x < w.size(); ++x) {
      const Distance d = set_distance(w, x, block);
      if (d >= half) continue;
      h.values[x] += Rational(half - d, half);
      h.summand[x] = half;
    }
  }
  std::sort(h.selected.begin(), h.selected.end());
  return h;
}

HigsonFunction higson_max(const HigsonFunction& f, const HigsonFunction& g) {
  if (f.values.size() != g.values.size()) throw UsageError("higson_max: functions live on different windows");
  HigsonFunction out;
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = std::max(f.values[i], g.values[i]);
  return out;
}

VariationReport variation_report(const Window& w, const std::vector<Rational>& h, const Rational& epsilon, Distance r) {
  if (epsilon <= 0) throw UsageError("variation_report: epsilon must be > 0");
  if (r < 0 || r > w.horizon()) throw UsageError("variation_report: r must lie in [0, H]");
  if (h.size() != w.size()) throw UsageError("variation_report: function size does not match the window");
  VariationReport rep;
  rep.epsilon = epsilon;
  rep.r = r;
  for (PointId x = 0; x < w.size(); ++x) {
    const bool x_inner = w.in_interior(x, r);
    for (PointId y : w.ball(x, r)) {
      if (y <= x) continue;
      if (!x_inner && !w.in_interior(y, r)) continue;
      const Rational delta = abs(h[x] - h[y]);
      rep.sup_variation = std::max(rep.sup_variation, delta);
      if (delta > epsilon) {
        rep.violators.emplace_back(x, y);
        rep.enclosing_radius = std::max({rep.enclosing_radius, w.depth(x), w.depth(y)});
      }
    }
  }
  return rep;
}

}  // namespace coarsekit
