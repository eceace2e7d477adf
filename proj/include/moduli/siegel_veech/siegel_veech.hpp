#pragma once

#include "moduli/volumes/volumes.hpp"

#include <vector>

namespace moduli::siegel_veech {

using numeric::BigFloat;
using numeric::PiValue;
using numeric::Rational;
using volumes::VolumeCalculator;

struct SvDecomposition {
  int g = 0;
  int n = 0;
  PiValue kappa1;
  PiValue kappa2;
  PiValue kappa3;
  PiValue c_area;
};

// c_area(Q_{g,n}) = kappa1 + kappa2 + kappa3 for g >= 2.
SvDecomposition c_area(VolumeCalculator& volumes, int g, int n);

// kappa1 summed over unordered pairs {(g1,n1), (g2,n2)}, doubling off-diagonal
// pairs. Must agree with the ordered sum.
PiValue kappa1_unordered(VolumeCalculator& volumes, int g, int n);

// (1/24)(20g/3 - 4n/3 - 20/3) + (pi^2/3) c_area
PiValue lyapunov_sum(const SvDecomposition& decomposition);
PiValue lyapunov_sum(VolumeCalculator& volumes, int g, int n);

struct TrendRow {
  int g = 0;
  BigFloat value;
  BigFloat deviation;  // |c_area - 1/4|
};

std::vector<TrendRow> c_area_trend(VolumeCalculator& volumes, int g_min, int g_max, int n,
                                   unsigned digits);

}  // namespace moduli::siegel_veech
