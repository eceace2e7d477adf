#include "common.hpp"

#include "moduli/siegel_veech/siegel_veech.hpp"
#include "moduli/volumes/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace moduli::cli {

namespace {

constexpr int kRandomSamples = 64;

// Extremes, balanced tuples and uniform random compositions of 3g+n-3 into
// n nonnegative parts, sorted descending and deduplicated.
std::set<std::vector<int>> sample_exponents(int g, int n) {
  const int total = 3 * g + n - 3;
  std::set<std::vector<int>> out;
  auto add = [&](std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<>());
    out.insert(std::move(d));
  };

  std::vector<int> extreme(n, 0);
  extreme[0] = total;
  add(extreme);

  std::vector<int> balanced(n, total / n);
  for (int i = 0; i < total % n; ++i) ++balanced[i];
  add(balanced);

  // Stars and bars: n-1 bar positions among total+n-1 slots.
  std::mt19937_64 rng(0x5eed0000ull + static_cast<unsigned>(g) * 1009u + static_cast<unsigned>(n));
  std::vector<int> slots(total + n - 1);
  std::iota(slots.begin(), slots.end(), 0);
  for (int s = 0; s < kRandomSamples; ++s) {
    std::vector<int> bars;
    std::sample(slots.begin(), slots.end(), std::back_inserter(bars), n - 1, rng);
    std::vector<int> d;
    int previous = -1;
    for (int b : bars) {
      d.push_back(b - previous - 1);
      previous = b;
    }
    d.push_back(total + n - 1 - previous - 1);
    add(std::move(d));
  }
  return out;
}

IntRange or_default(const std::optional<IntRange>& r, IntRange fallback) {
  return r ? *r : fallback;
}

}  // namespace

Table report_convergence(const RunConfig& config, const correlators::CorrelatorEngine& engine) {
  numeric::ScopedDigits guard(config.precision);
  Table table{{"section", "g", "n", "value", "limit", "deviation"}, {}};
  const bool all = config.suite == "all";

  if (all || config.suite == "correlators") {
    IntRange gs = or_default(config.g, {4, 16});
    IntRange ns = or_default(config.n, {2, 3});
    for (int n = std::max(ns.lo, 1); n <= ns.hi; ++n) {
      for (int g = std::max(gs.lo, 1); g <= gs.hi; ++g) {
        if (!(n < config.epsilon * std::sqrt(static_cast<double>(g)))) continue;
        Rational worst = 0;
        for (const auto& d : sample_exponents(g, n)) {
          Rational dev = abs(engine.normalized(g, d) - 1);
          if (dev > worst) worst = dev;
        }
        table.rows.push_back({"correlator", std::to_string(g), std::to_string(n), "", "1",
                              format_float(numeric::to_float(worst), 12)});
      }
    }
  }

  volumes::VolumeCalculator calculator(engine, {config.threads});
  if (all || config.suite == "volumes") {
    IntRange gs = or_default(config.g, {1, 4});
    IntRange ns = or_default(config.n, {0, 2});
    for (int g = std::max(gs.lo, 0); g <= gs.hi; ++g) {
      for (int n = std::max(ns.lo, 0); n <= ns.hi; ++n) {
        if (2 * g + n < 3 || (g == 0 && n == 3)) continue;
        auto ratio = volumes::normalized_ratio(calculator.volume(g, n), g, n, config.precision);
        table.rows.push_back({"volume_ratio", std::to_string(g), std::to_string(n),
                              format_float(ratio, 12), "1",
                              format_float(abs(ratio - 1), 12)});
      }
    }
  }

  if (all || config.suite == "svc") {
    IntRange gs = or_default(config.g, {2, 4});
    IntRange ns = or_default(config.n, {0, 1});
    for (int n = std::max(ns.lo, 0); n <= ns.hi; ++n) {
      for (const auto& row :
           siegel_veech::c_area_trend(calculator, std::max(gs.lo, 2), gs.hi, n, config.precision)) {
        table.rows.push_back({"c_area", std::to_string(row.g), std::to_string(n),
                              format_float(row.value, 12), "0.25",
                              format_float(row.deviation, 12)});
      }
    }
  }
  return table;
}

}  // namespace moduli::cli
