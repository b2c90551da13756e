#pragma once

#include <string>
#include <vector>

#include "coarsekit/zoo.hpp"

namespace fixtures {

using namespace coarsekit;

inline FiniteSpec unit_pair() { return {{}, {{0, 1}, {1, 0}}}; }

inline FiniteSpec path3() { return {{"p", "q", "s"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}}; }

inline GrowthFunction linear(Distance a, Distance b = 0) { return {GrowthFunction::Form::Linear, a, b, 2}; }
inline GrowthFunction quadratic(Distance a, Distance b = 0) { return {GrowthFunction::Form::Quadratic, a, b, 2}; }

struct Named {
  std::string name;
  Window window;
};

/// One small window per zoo constructor.
inline std::vector<Named> small_zoo() {
  std::vector<Named> out;
  out.push_back({"N", make_grid(false, 1, 40)});
  out.push_back({"Z", make_grid(true, 1, 30)});
  out.push_back({"N2", make_grid(false, 2, 12)});
  out.push_back({"Z2", make_grid(true, 2, 8)});
  out.push_back({"F2", make_free_group(2, 4)});
  out.push_back({"M", make_M(6)});
  out.push_back({"M2", make_Mk(2, 200)});
  out.push_back({"M32", make_M32(2000)});
  out.push_back({"clusters", make_cluster_space(path3(), linear(2), 6)});
  out.push_back({"union", make_coarse_union({std::make_shared<GridSpace>(false, 1), std::make_shared<FreeGroupSpace>(2)},
                                            linear(3), 9)});
  return out;
}

}  // namespace fixtures
