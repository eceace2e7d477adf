#include "moduli/harmonic/harmonic.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <cmath>
#include <mpfr.h>

namespace moduli::harmonic {

namespace {

std::vector<BigFloat> base_series(SumKind kind, int N) {
  std::vector<BigFloat> p(static_cast<std::size_t>(N + 1));
  p[0] = 0;
  for (int m = 1; m <= N; ++m) {
    if (kind == SumKind::H) {
      p[m] = BigFloat(1) / m;
    } else {
      p[m] = numeric::zeta_float(2UL * static_cast<unsigned long>(m)) / m;
    }
  }
  return p;
}

// out[m] = sum_a base[a] cur[m - a], truncated at N. cur vanishes below
// `order` and base vanishes at 0.
std::vector<BigFloat> convolve(const std::vector<BigFloat>& base, const std::vector<BigFloat>& cur,
                               int order) {
  const int N = static_cast<int>(cur.size()) - 1;
  std::vector<BigFloat> out(cur.size());
  mpfr_t acc, tmp;
  mpfr_prec_t prec = mpfr_get_prec(base[1].backend().data());
  mpfr_inits2(prec, acc, tmp, static_cast<mpfr_ptr>(nullptr));
  for (int m = 0; m <= N; ++m) {
    mpfr_set_zero(acc, 1);
    for (int a = 1; a <= m - order; ++a) {
      mpfr_mul(tmp, base[a].backend().data(), cur[m - a].backend().data(), MPFR_RNDN);
      mpfr_add(acc, acc, tmp, MPFR_RNDN);
    }
    mpfr_set(out[m].backend().data(), acc, MPFR_RNDN);
  }
  mpfr_clears(acc, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

std::vector<SeriesTable> series_tables(SumKind kind, int k_max, int N, unsigned digits) {
  if (k_max < 1 || N < k_max) throw DomainError("series tables need N >= k >= 1");
  numeric::ScopedDigits guard(digits + 10);
  std::vector<BigFloat> base = base_series(kind, N);
  std::vector<SeriesTable> out;
  out.push_back(SeriesTable{kind, 1, N, base});
  for (int k = 2; k <= k_max; ++k)
    out.push_back(SeriesTable{kind, k, N, convolve(base, out.back().coefficients, k - 1)});
  return out;
}

SeriesTable series_table(SumKind kind, int k, int N, unsigned digits) {
  return std::move(series_tables(kind, k, N, digits).back());
}

BigFloat weighted_sum_limit(SumKind kind) {
  BigFloat root_pi = sqrt(numeric::pi_float());
  if (kind == SumKind::H) return 2 / root_pi;
  return 2 * sqrt(BigFloat(2)) / root_pi;
}

BigFloat weighted_sum(SumKind kind, int N, double omega, unsigned digits) {
  if (!(omega > 0.5)) throw DomainError("weighted_sum needs omega > 1/2");
  if (N < 3) throw DomainError("weighted_sum needs N >= 3");
  const int mu = static_cast<int>(std::floor(omega * std::log(static_cast<double>(N))));
  numeric::ScopedDigits guard(digits + 10);
  BigFloat sum = 0;
  if (mu >= 1) {
    auto tables = series_tables(kind, std::min(mu, N), N, digits);
    BigFloat weight = 1;  // 1 / (2^{k-1} k!)
    for (int k = 1; k <= static_cast<int>(tables.size()); ++k) {
      if (k > 1) weight /= 2 * k;
      sum += tables[k - 1].coefficients[N] * weight;
    }
  }
  return sqrt(BigFloat(N)) * sum;
}

BigFloat expansion_error(SumKind kind, int k, int N, unsigned digits) {
  if (k < 1) throw DomainError("expansion_error needs k >= 1");
  double logN = std::log(static_cast<double>(N));
  if (N < 2 || k > logN * logN) throw DomainError("expansion_error needs k <= (ln N)^2");
  numeric::ScopedDigits guard(digits + 10);
  SeriesTable table = series_table(kind, k, N, digits);
  PhiCoefficients phi = phi_series(k, digits);
  BigFloat L = log(BigFloat(N));
  if (kind == SumKind::Z) L += log(BigFloat(2));
  BigFloat expansion = 0;
  for (int j = 1; j <= k; ++j)
    expansion += numeric::to_float(Rational(numeric::binomial(k, j))) * phi.values[j] * pow(L, k - j);
  return abs(N * table.coefficients[N] - expansion);
}

}  // namespace moduli::harmonic
