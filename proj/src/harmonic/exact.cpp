#include "moduli/harmonic/harmonic.hpp"

#include <functional>

namespace moduli::harmonic {

const char* to_string(SumKind kind) { return kind == SumKind::H ? "H" : "Z"; }

namespace {

// sum over positive compositions of m of length k of prod weight(a_i).
Rational composition_sum(int k, int m, const std::function<Rational(int)>& weight) {
  if (k == 0) return m == 0 ? 1 : 0;
  if (k < 0 || m < k) return 0;
  std::vector<Rational> w(static_cast<std::size_t>(m + 1));
  for (int a = 1; a <= m; ++a) w[a] = weight(a);
  Rational total = 0;
  std::function<void(int, int, const Rational&)> walk = [&](int slots, int remaining,
                                                             const Rational& prefix) {
    if (slots == 1) {
      total += prefix * w[remaining];
      return;
    }
    for (int a = 1; a <= remaining - (slots - 1); ++a) walk(slots - 1, remaining - a, prefix * w[a]);
  };
  walk(k, m, Rational(1));
  return total;
}

}  // namespace

Rational harmonic_H_exact(int k, int m) {
  return composition_sum(k, m, [](int a) -> Rational { return numeric::make_rational(1, a); });
}

PiValue harmonic_Z_exact(int k, int m) {
  Rational c = composition_sum(
      k, m, [](int a) -> Rational { return numeric::zeta_even_coefficient(2 * a) / Rational(a); });
  return PiValue(c, 2 * m);
}

}  // namespace moduli::harmonic
