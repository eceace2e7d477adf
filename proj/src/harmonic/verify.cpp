#include "moduli/harmonic/harmonic.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <cmath>
#include <map>

namespace moduli::harmonic {

namespace {

constexpr unsigned kEnclosureBits = 256;

// Certified bounds for c pi^p with c >= 0.
Rational upper_for(const PiValue& value, const numeric::RationalInterval& pi) {
  Rational out = 0;
  for (const auto& [p, c] : value.terms()) {
    const Rational& base = (p >= 0) == (c >= 0) ? pi.upper : pi.lower;
    out += c * numeric::power(base, p);
  }
  return out;
}

std::string label(const char* what, int k, int N) {
  return std::string(what) + " k=" + std::to_string(k) + " N=" + std::to_string(N);
}

}  // namespace

ZInequalityReport verify_Z_inequalities(int k_max, int n_exact_max,
                                        const std::vector<int>& float_horizons, unsigned digits) {
  ZInequalityReport report;
  const auto pi = numeric::pi_enclosure(kEnclosureBits);

  std::map<std::pair<int, int>, PiValue> z;
  auto Z = [&](int k, int m) -> const PiValue& {
    auto it = z.find({k, m});
    if (it == z.end()) it = z.emplace(std::pair{k, m}, harmonic_Z_exact(k, m)).first;
    return it->second;
  };

  for (int k = 1; k <= k_max; ++k) {
    PiValue cumulative;
    for (int N = 1; N <= n_exact_max; ++N) {
      const PiValue& value = Z(k, N);
      cumulative += value;
      auto log_n = numeric::log_enclosure(Rational(N), kEnclosureBits);
      // Both right-hand sides increase with ln N, so its lower end is safe.
      Rational base = log_n.lower + 5;
      if (N >= k) {
        Rational bound = Rational(2 * k) * numeric::power(base, k - 1) / Rational(N);
        ++report.upper_bound_checks;
        if (!(upper_for(value, pi) <= bound)) report.failures.push_back(label("Z upper bound", k, N));
      }
      ++report.cumulative_checks;
      if (!(upper_for(cumulative, pi) <= numeric::power(base, k)))
        report.failures.push_back(label("Z cumulative bound", k, N));
    }
  }

  // Product-sum inequality over r blocks.
  for (int r = 1; r <= 3; ++r) {
    for (int j = 0; j <= 4; ++j) {
      for (int m = 0; m <= 12; ++m) {
        numeric::for_each_composition({r, j, false}, [&](const std::vector<int>& js) {
          PiValue lhs;
          numeric::for_each_composition({r, m, false}, [&](const std::vector<int>& ms) {
            PiValue product(Rational(1));
            for (int i = 0; i < r && !product.is_zero(); ++i) product *= Z(js[i], ms[i]);
            lhs += product;
          });
          const PiValue& rhs = Z(j, m);
          // Both sides are c pi^{2m}.
          Rational diff = rhs.coefficient(2 * m) - lhs.coefficient(2 * m);
          ++report.product_sum_checks;
          if (diff < 0 || lhs.terms().size() > 1) {
            report.failures.push_back("Z product sum r=" + std::to_string(r) + " j=" +
                                      std::to_string(j) + " m=" + std::to_string(m));
          } else if (diff == 0) {
            ++report.product_sum_equalities;
          }
        });
      }
    }
  }

  numeric::ScopedDigits guard(digits);
  for (int N : float_horizons) {
    if (N < k_max) continue;
    auto tables = series_tables(SumKind::Z, k_max, N, digits);
    BigFloat base = log(BigFloat(N)) + 5;
    for (int k = 1; k <= k_max; ++k) {
      const auto& c = tables[k - 1].coefficients;
      BigFloat bound = 2 * k * pow(base, k - 1) / N;
      ++report.float_checks;
      if (!(c[N] <= bound)) report.failures.push_back(label("Z upper bound (float)", k, N));
      BigFloat cumulative = 0;
      for (int m = 1; m <= N; ++m) cumulative += c[m];
      ++report.float_checks;
      if (!(cumulative <= pow(base, k)))
        report.failures.push_back(label("Z cumulative bound (float)", k, N));
    }
  }
  return report;
}

}  // namespace moduli::harmonic
