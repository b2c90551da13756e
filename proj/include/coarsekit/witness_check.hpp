#pragma once

#include <string>

#include "coarsekit/criteria.hpp"

namespace coarsekit {

/// Outcome of re-checking a certificate from its stored coordinates alone.
struct CheckResult {
  bool ok = true;
  std::string reason;  // first failure found
  explicit operator bool() const { return ok; }
};

CheckResult verify_tower_witness(const TowerWitness& wit, const Window& w);
CheckResult verify_pair_family(const PairFamilyWitness& wit, const Window& w);
CheckResult verify_split_witness(const SplitWitness& wit, const Window& w);

}  // namespace coarsekit
