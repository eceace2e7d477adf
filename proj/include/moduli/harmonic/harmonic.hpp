#pragma once

#include "moduli/numeric/bigfloat.hpp"
#include "moduli/numeric/pi_value.hpp"
#include "moduli/numeric/rational.hpp"

#include <string>
#include <vector>

namespace moduli::harmonic {

using numeric::BigFloat;
using numeric::PiValue;
using numeric::Rational;

enum class SumKind { H, Z };

const char* to_string(SumKind kind);

// H_k(m) = sum over positive compositions a of m of length k of prod 1/a_i.
// H_0(0) = 1; other out-of-range arguments give 0.
Rational harmonic_H_exact(int k, int m);
// Z_k(m) = sum prod zeta(2 a_i)/a_i, a rational multiple of pi^{2m}.
// Z_0(0) = 1.
PiValue harmonic_Z_exact(int k, int m);

// Coefficients 0..N of p(w)^k with p(w) = sum w^m/m (H) or
// sum zeta(2m) w^m/m (Z).
struct SeriesTable {
  SumKind kind = SumKind::H;
  int order = 0;
  int horizon = 0;
  std::vector<BigFloat> coefficients;
};

SeriesTable series_table(SumKind kind, int k, int N, unsigned digits);
// Orders 1..k_max; element i holds order i + 1.
std::vector<SeriesTable> series_tables(SumKind kind, int k_max, int N, unsigned digits);

enum class PhiMethod { series, contour };

// phi_j = d^j/ds^j [Gamma(1-s) sin(pi s)/pi] at s = 0.
struct PhiCoefficients {
  std::vector<BigFloat> values;
  int max_order = 0;
  PhiMethod method = PhiMethod::series;
};

// From exp(gamma s + sum_{i>=2} zeta(i) s^i / i) * sin(pi s)/pi; the
// coefficients through order J involve no truncation.
PhiCoefficients phi_series(int J, unsigned digits);

struct QuadratureParams {
  double t_max = 40.0;
  int panels = 400;
  int arc_panels = 16;
  // Largest acceptable tail bound.
  double tolerance = 1e-10;
};

struct ContourResult {
  double value = 0;
  double imaginary_residual = 0;
  double tail_bound = 0;
};

// (1/2 pi i) int (-log(-t))^j e^{-t} dt over the contour that comes in
// along Im t = -1, turns around the origin on the left unit half-circle,
// and leaves along Im t = +1. Throws AccuracyError when the tail bound
// exceeds params.tolerance.
ContourResult phi_contour(int j, const QuadratureParams& params = {});

// N^{1/2} sum_{k <= floor(omega ln N)} X_k(N) / (2^{k-1} k!).
BigFloat weighted_sum(SumKind kind, int N, double omega, unsigned digits);
// 2 pi^{-1/2} for H and 2^{3/2} pi^{-1/2} for Z.
BigFloat weighted_sum_limit(SumKind kind);

// |N X_k(N) - sum_{j=1}^k C(k,j) phi_j L^{k-j}|, L = ln N (+ ln 2 for Z).
BigFloat expansion_error(SumKind kind, int k, int N, unsigned digits);

struct ZInequalityReport {
  std::size_t upper_bound_checks = 0;      // Z_k(N) <= 2k (ln N + 5)^{k-1} / N
  std::size_t cumulative_checks = 0;       // sum_{m<=N} Z_k(m) <= (ln N + 5)^k
  std::size_t product_sum_checks = 0;      // sum prod Z_{j_i}(m_i) <= Z_j(m)
  std::size_t product_sum_equalities = 0;
  std::size_t float_checks = 0;
  std::vector<std::string> failures;

  bool holds() const { return failures.empty(); }
};

// Exact (certified) checks for k <= k_max, N <= n_exact_max; float checks of
// the first two inequalities at each N in float_horizons.
ZInequalityReport verify_Z_inequalities(int k_max, int n_exact_max,
                                        const std::vector<int>& float_horizons, unsigned digits);

}  // namespace moduli::harmonic
