#include "moduli/walk/walk.hpp"

#include "moduli/numeric/errors.hpp"

#include <algorithm>

namespace moduli::walk {

namespace {

const Rational kDown = numeric::make_rational(2, 3);
const Rational kUp = numeric::make_rational(1, 3);
const Rational kTilt = numeric::make_rational(3, 2);

// Dense DP state: index i holds the mass of state i.
class Evolution {
 public:
  explicit Evolution(int n) : mass_(static_cast<std::size_t>(n + 1)) { mass_[n] = 1; }

  void step() {
    std::vector<Rational> next(mass_.size() + 1);
    next[2] = mass_[2];
    for (std::size_t s = 3; s < mass_.size(); ++s) {
      if (mass_[s] == 0) continue;
      next[s - 1] += kDown * mass_[s];
      next[s + 1] += kUp * mass_[s];
    }
    mass_ = std::move(next);
  }

  const Rational& absorbed() const { return mass_[2]; }

  Rational tilted() const {
    Rational sum = 0;
    Rational weight = numeric::power(kTilt, 3);
    for (std::size_t s = 3; s < mass_.size(); ++s) {
      if (mass_[s] != 0) sum += weight * mass_[s];
      weight *= kTilt;
    }
    return sum;
  }

  const std::vector<Rational>& mass() const { return mass_; }

 private:
  std::vector<Rational> mass_;
};

Evolution evolve(int n, int t) {
  if (n < 3) throw DomainError("walk needs a start n >= 3");
  if (t < 0) throw DomainError("walk needs t >= 0");
  Evolution evolution(n);
  for (int i = 0; i < t; ++i) evolution.step();
  return evolution;
}

}  // namespace

Rational WalkDistribution::total() const {
  Rational sum = 0;
  for (const auto& [state, p] : mass) sum += p;
  return sum;
}

Rational WalkDistribution::at(int state) const {
  auto it = mass.find(state);
  return it == mass.end() ? Rational(0) : it->second;
}

WalkDistribution walk_distribution(int n, int t) {
  Evolution evolution = evolve(n, t);
  WalkDistribution out{n, t, {}};
  const auto& mass = evolution.mass();
  for (std::size_t s = 2; s < mass.size(); ++s)
    if (mass[s] != 0) out.mass.emplace(static_cast<int>(s), mass[s]);
  return out;
}

Rational absorption_probability(int n, int t) { return evolve(n, t).absorbed(); }

Rational tilted_expectation(int n, int t) { return evolve(n, t).tilted(); }

bool lower_bound_admissible(int g, int n, int t) { return n >= 2 && t >= 0 && g > t; }

bool upper_bound_admissible(int g, int n, int t) {
  return n >= 2 && t >= 0 && static_cast<long>(g) > static_cast<long>(t + 2) * n + static_cast<long>(t) * t;
}

Rational lower_bound_f(int g, int n, int t) {
  if (!lower_bound_admissible(g, n, t)) throw DomainError("lower_bound_f needs g > t >= 0, n >= 2");
  if (n == 2) return numeric::make_rational(6L * g - 3, 6L * g - 1);
  Rational decay = numeric::power(Rational(1 - numeric::make_rational(1, 4L * g - 4L * t)), t);
  Rational correction = 1 - numeric::make_rational(2, 6L * g - 6L * t - 1);
  return decay * correction * absorption_probability(n, t);
}

Rational upper_bound_F(int g, int n, int t) {
  if (!upper_bound_admissible(g, n, t))
    throw DomainError("upper_bound_F needs g > (t+2)n + t^2, n >= 2, t >= 0");
  if (n == 2) return 1;
  long gap = static_cast<long>(g) - static_cast<long>(t) * n - static_cast<long>(t) * t;
  Rational growth = numeric::power(Rational(1 + numeric::make_rational(n + 2L * t + 9, 4 * gap)), t);
  Evolution evolution = evolve(n, t);
  return growth * (evolution.absorbed() + evolution.tilted());
}

TiltedDecayReport verify_tilted_decay(int n_max, int t_max) {
  TiltedDecayReport report;
  for (int n = 3; n <= n_max; ++n) {
    Evolution evolution(n);
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) evolution.step();
      Rational lhs = numeric::power(evolution.tilted(), 10);
      Rational rhs = numeric::power(numeric::make_rational(2, 3), static_cast<long>(t) - 10L * n);
      Rational ratio = lhs / rhs;
      report.max_ratio = std::max(report.max_ratio, ratio.get_d());
      if (lhs > rhs) report.violations.push_back({n, t});
      ++report.checks;
    }
  }
  return report;
}

}  // namespace moduli::walk
