#pragma once

#include "moduli/numeric/rational.hpp"

#include <map>
#include <vector>

namespace moduli::walk {

using numeric::Rational;

// Law of w_n(t): starts at n, absorbed at 2, otherwise steps -1 with
// probability 2/3 and +1 with probability 1/3.
struct WalkDistribution {
  int start = 3;
  int time = 0;
  std::map<int, Rational> mass;

  Rational total() const;
  Rational at(int state) const;
};

WalkDistribution walk_distribution(int n, int t);

// P[w_n(t) = 2]
Rational absorption_probability(int n, int t);
// E[(3/2)^{w_n(t)} 1_{w_n(t) > 2}]
Rational tilted_expectation(int n, int t);

// f_{g,n}(t), requires g > t >= 0 and n >= 2.
Rational lower_bound_f(int g, int n, int t);
// F_{g,n}(t), requires g > (t+2) n + t^2, n >= 2 and t >= 0.
Rational upper_bound_F(int g, int n, int t);

bool lower_bound_admissible(int g, int n, int t);
bool upper_bound_admissible(int g, int n, int t);

struct TiltedDecayViolation {
  int n;
  int t;
};

struct TiltedDecayReport {
  std::size_t checks = 0;
  std::vector<TiltedDecayViolation> violations;
  // max over the grid of E^10 / (2/3)^{t - 10n}
  double max_ratio = 0;

  bool holds() const { return violations.empty(); }
};

// E[(3/2)^w 1_{w>2}]^10 <= (2/3)^{t-10n} for 3 <= n <= n_max, 0 <= t <= t_max.
TiltedDecayReport verify_tilted_decay(int n_max, int t_max);

}  // namespace moduli::walk
