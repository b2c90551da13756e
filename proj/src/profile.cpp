#include <algorithm>
#include <limits>

#include "coarsekit/criteria.hpp"

namespace coarsekit {

std::string to_string(Epistemic e) {
  switch (e) {
    case Epistemic::Certificate: return "CERTIFICATE";
    case Epistemic::NoWitnessAtScale: return "NO_WITNESS_AT_SCALE";
    case Epistemic::Profile: return "PROFILE";
  }
  return "PROFILE";
}

std::string to_string(SeparationValue::Status s) {
  switch (s) {
    case SeparationValue::Status::Exact: return "exact";
    case SeparationValue::Status::UpperBound: return "upper_bound";
    case SeparationValue::Status::ExceedsWindow: return "exceeds_window";
  }
  return "exact";
}

std::string to_string(DivergenceReport::Trend t) {
  switch (t) {
    case DivergenceReport::Trend::Diverging: return "DIVERGING";
    case DivergenceReport::Trend::Bounded: return "BOUNDED";
    case DivergenceReport::Trend::Mixed: return "MIXED";
  }
  return "MIXED";
}

SeparationProfile separation_profile(const Window& w, Distance r) {
  if (r < 1) throw UsageError("separation_profile: r must be >= 1");
  if (2 * r > w.horizon()) throw UsageError("separation_profile: 2r exceeds the window horizon");
  SeparationProfile profile;
  profile.r = r;
  const Distance max_radius = std::max<Distance>(1, 2 * w.horizon());
  std::vector<std::uint32_t> stamp(w.size(), 0);
  std::uint32_t generation = 0;

  for (PointId x : w.interior(2 * r)) {
    const PointSet inner = w.ball(x, r);
    ++generation;
    for (PointId z : inner) stamp[z] = generation;

    // Smallest d(z, y), z in N_r(x), y outside. Once some pair is found within
    // radius L, every closer pair also lies within L, so the minimum is exact.
    Distance best = std::numeric_limits<Distance>::max();
    for (Distance radius = 1;; radius = std::min(2 * radius, max_radius)) {
      for (PointId z : inner) {
        for (PointId y : w.ball(z, radius)) {
          if (stamp[y] != generation) best = std::min(best, w.distance(z, y));
        }
      }
      if (best != std::numeric_limits<Distance>::max() || radius >= max_radius) break;
    }

    SeparationValue v{x, 0, SeparationValue::Status::ExceedsWindow};
    if (best != std::numeric_limits<Distance>::max()) {
      v.value = best;
      v.status = (w.depth(x) + r + best <= w.horizon()) ? SeparationValue::Status::Exact
                                                        : SeparationValue::Status::UpperBound;
    }
    profile.values.push_back(v);
  }
  return profile;
}

DivergenceReport divergence_report(const Window& w, const SeparationProfile& profile, std::size_t annuli) {
  if (annuli < 2) throw UsageError("divergence_report: at least 2 annuli required");
  DivergenceReport rep;
  rep.r = profile.r;
  const Distance span = w.horizon() - 2 * profile.r + 1;
  const Distance width = std::max<Distance>(1, (span + static_cast<Distance>(annuli) - 1) /
                                                   static_cast<Distance>(annuli));
  std::vector<std::optional<Distance>> band_min(annuli);
  for (const auto& v : profile.values) {
    if (v.status == SeparationValue::Status::ExceedsWindow) continue;
    const auto band = std::min<std::size_t>(annuli - 1, static_cast<std::size_t>(w.depth(v.point) / width));
    band_min[band] = std::min(band_min[band].value_or(v.value), v.value);
  }
  for (std::size_t i = 0; i < annuli; ++i) {
    if (!band_min[i]) continue;
    rep.annuli.emplace_back(static_cast<Distance>(i) * width, static_cast<Distance>(i + 1) * width);
    rep.minima.push_back(*band_min[i]);
  }
  if (rep.minima.size() < 2) throw UsageError("divergence_report: fewer than 2 nonempty annuli");

  const bool increasing = std::adjacent_find(rep.minima.begin(), rep.minima.end(),
                                             [](Distance a, Distance b) { return b <= a; }) == rep.minima.end();
  rep.cap = *std::max_element(rep.minima.begin(), rep.minima.end() - 1);
  if (increasing) {
    rep.trend = DivergenceReport::Trend::Diverging;
  } else if (rep.minima.back() <= rep.cap) {
    rep.trend = DivergenceReport::Trend::Bounded;
  } else {
    rep.trend = DivergenceReport::Trend::Mixed;
  }
  return rep;
}

}  // namespace coarsekit
