#include "moduli/siegel_veech/siegel_veech.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

namespace moduli::siegel_veech {

using numeric::factorial;
using numeric::make_rational;

namespace {

bool in_index_set(int gi, int ni) { return gi >= 0 && ni >= 1 && 3 * gi + ni >= 4; }

// Summand of kappa1 for an ordered pair, before the 1/(8 Vol) factor.
PiValue kappa1_term(VolumeCalculator& volumes, int g, int n, int g1, int n1, int g2, int n2) {
  Rational weight =
      make_rational(factorial(4 * g + n - 4),
                    factorial(4 * g1 + n1 - 4) * factorial(4 * g2 + n2 - 4)) *
      make_rational(factorial(n), factorial(n1 - 1) * factorial(n2 - 1)) *
      make_rational(factorial(6 * g1 + 2 * n1 - 7) * factorial(6 * g2 + 2 * n2 - 7),
                    factorial(6 * g + 2 * n - 7));
  return volumes.volume(g1, n1) * volumes.volume(g2, n2) * weight;
}

void check_domain(int g, int n) {
  if (g < 2) throw DomainError("c_area needs g >= 2");
  if (n < 0) throw DomainError("c_area needs n >= 0");
}

}  // namespace

SvDecomposition c_area(VolumeCalculator& volumes, int g, int n) {
  check_domain(g, n);
  SvDecomposition out;
  out.g = g;
  out.n = n;
  const PiValue& vol = volumes.volume(g, n);
  const long a = 4L * g + n - 4;
  const long b = 6L * g + 2L * n - 7;

  PiValue sum;
  for (int g1 = 0; g1 <= g; ++g1) {
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      const int g2 = g - g1;
      const int n2 = n + 2 - n1;
      if (!in_index_set(g1, n1) || !in_index_set(g2, n2)) continue;
      sum += kappa1_term(volumes, g, n, g1, n1, g2, n2);
    }
  }
  out.kappa1 = sum * make_rational(1, 8) / vol;

  if (n >= 2) {
    out.kappa2 = volumes.volume(g, n - 1) *
                 make_rational(static_cast<long>(n) * (n - 1) * a, b * (b - 1)) *
                 make_rational(1, 4) / vol;
  }
  out.kappa3 = volumes.volume(g - 1, n + 2) * make_rational(a * (a - 1), b * (b - 1)) / vol;
  out.c_area = out.kappa1 + out.kappa2 + out.kappa3;
  return out;
}

PiValue kappa1_unordered(VolumeCalculator& volumes, int g, int n) {
  check_domain(g, n);
  PiValue sum;
  for (int g1 = 0; g1 <= g; ++g1) {
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      const int g2 = g - g1;
      const int n2 = n + 2 - n1;
      if (std::pair{g1, n1} > std::pair{g2, n2}) continue;
      if (!in_index_set(g1, n1) || !in_index_set(g2, n2)) continue;
      PiValue term = kappa1_term(volumes, g, n, g1, n1, g2, n2);
      sum += std::pair{g1, n1} == std::pair{g2, n2} ? term : term * Rational(2);
    }
  }
  return sum * make_rational(1, 8) / volumes.volume(g, n);
}

PiValue lyapunov_sum(const SvDecomposition& d) {
  Rational constant = make_rational(1, 24) * make_rational(20L * d.g - 4L * d.n - 20, 3);
  return PiValue(constant) + PiValue(make_rational(1, 3), 2) * d.c_area;
}

PiValue lyapunov_sum(VolumeCalculator& volumes, int g, int n) {
  return lyapunov_sum(c_area(volumes, g, n));
}

std::vector<TrendRow> c_area_trend(VolumeCalculator& volumes, int g_min, int g_max, int n,
                                   unsigned digits) {
  numeric::ScopedDigits guard(digits);
  std::vector<TrendRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    TrendRow row;
    row.g = g;
    row.value = c_area(volumes, g, n).c_area.to_float();
    row.deviation = abs(row.value - BigFloat(0.25));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace moduli::siegel_veech
