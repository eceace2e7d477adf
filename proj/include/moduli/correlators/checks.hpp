#pragma once

#include "moduli/correlators/engine.hpp"

#include <vector>

namespace moduli::correlators {

struct BoundCheckReport {
  std::size_t keys_checked = 0;
  // max of <d> (2/3)^{n-1}
  Rational max_ratio = 0;
  CorrelatorKey argmax;
  std::vector<CorrelatorKey> violations;

  bool holds() const { return violations.empty(); }
};

// <d>_{g,n} <= (3/2)^{n-1} over every key with 3g+n-3 <= max_dim.
BoundCheckReport exhaustive_bound_check(const CorrelatorEngine& engine, int max_dim);

struct TwoPointReport {
  int genus = 0;
  Rational lower_bound;  // (6g-3)/(6g-1)
  Rational min_value;
  Rational max_value;
  std::vector<Rational> values;  // indexed by k in [0, 3g-1]
  bool holds = false;
};

// (6g-3)/(6g-1) <= <k, 3g-1-k>_{g,2} <= 1 for every k.
TwoPointReport two_point_scan(const CorrelatorEngine& engine, int genus);

}  // namespace moduli::correlators
