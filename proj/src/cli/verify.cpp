#include "common.hpp"

#include "moduli/correlators/checks.hpp"
#include "moduli/correlators/key.hpp"
#include "moduli/graphs/stable_graph.hpp"
#include "moduli/harmonic/harmonic.hpp"
#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/inequalities.hpp"
#include "moduli/siegel_veech/siegel_veech.hpp"
#include "moduli/volumes/volumes.hpp"
#include "moduli/walk/walk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace moduli::cli {

using numeric::PiValue;

SandwichReport walk_sandwich(const correlators::CorrelatorEngine& engine, int max_dim,
                             int n_max) {
  auto keys = correlators::all_keys(max_dim);
  return walk_sandwich(engine, keys, n_max);
}

SandwichReport walk_sandwich(const correlators::CorrelatorEngine& engine,
                             std::span<const correlators::CorrelatorKey> keys, int n_max) {
  SandwichReport report;
  int g_top = 0;
  for (const auto& key : keys) g_top = std::max(g_top, key.genus);

  // lower[(g', n')] = max_t f_{g',n'}(t); the bound must hold for each t, so
  // the maximum is the binding one.
  std::map<std::pair<int, int>, Rational> lower;
  for (int gp = 1; gp <= g_top; ++gp)
    for (int np = 2; np <= n_max; ++np) {
      Rational best = walk::lower_bound_f(gp, np, 0);
      for (int t = 1; t < gp; ++t) best = std::max(best, walk::lower_bound_f(gp, np, t));
      lower[{gp, np}] = best;
    }

  for (const auto& key : keys) {
    const int g = key.genus;
    const int n = static_cast<int>(key.point_count());
    if (n < 2) continue;
    Rational value = engine.normalized(key);
    for (int gp = 1; gp <= g; ++gp)
      for (int np = n; np <= n_max; ++np) {
        ++report.lower_checks;
        if (lower[{gp, np}] > value)
          report.violations.push_back("f_{" + std::to_string(gp) + "," + std::to_string(np) +
                                      "} > <" + correlators::to_string(key) + ">");
      }
    for (int t = 0; walk::upper_bound_admissible(g, n, t); ++t) {
      ++report.upper_checks;
      if (value > walk::upper_bound_F(g, n, t))
        report.violations.push_back("<" + correlators::to_string(key) + "> > F(t=" +
                                    std::to_string(t) + ")");
    }
  }
  return report;
}

namespace {

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string check, bool passed, std::string detail = {}) {
    lines_.push_back({suite_, std::move(check), passed, std::move(detail)});
  }

  std::vector<VerifyLine> take() { return std::move(lines_); }

 private:
  std::string suite_;
  std::vector<VerifyLine> lines_;
};

std::string count_detail(std::size_t checks, std::size_t failures) {
  return std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
}

std::vector<VerifyLine> correlator_suite(const RunConfig& config,
                                         const correlators::CorrelatorEngine& engine) {
  Collector c("correlators");
  c.add("base values",
        engine.normalized(0, std::vector{0, 0, 0}) == 1 && engine.normalized(1, std::vector{1}) == 1 &&
            engine.raw(1, std::vector{1}) == Rational(1, 24));

  int bad = 0;
  for (int g = 1; g <= 25; ++g) bad += engine.normalized(g, std::vector{3 * g - 2}) != 1;
  c.add("one-point <3g-2> = 1, g <= 25", bad == 0, count_detail(25, bad));

  auto bound = correlators::exhaustive_bound_check(engine, config.max_dim);
  c.add("<d> <= (3/2)^{n-1}, |d| <= " + std::to_string(config.max_dim), bound.holds(),
        count_detail(bound.keys_checked, bound.violations.size()));

  bad = 0;
  for (int g = 1; g <= 12; ++g) bad += !correlators::two_point_scan(engine, g).holds;
  c.add("two-point bounds, g <= 12", bad == 0, count_detail(12, bad));

  bad = 0;
  for (int n = 3; n <= 18; ++n) {
    std::vector<int> d(n, 0);
    std::fill(d.begin(), d.begin() + (n - 3), 1);
    bad += engine.normalized(0, d) != correlators::genus_zero_closed_form(n);
  }
  c.add("genus-zero closed form, n <= 18", bad == 0, count_detail(16, bad));

  bad = 0;
  int checks = 0;
  for (int g = 1; g <= 10; ++g)
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> d(n, 1);
      d[0] = 3 * g - 2;
      ++checks;
      bad += engine.normalized(g, d) != correlators::dilaton_chain(g, n);
    }
  c.add("dilaton chain, g <= 10, n <= 6", bad == 0, count_detail(checks, bad));

  auto keys = correlators::all_keys(std::min(config.max_dim, 12));
  std::mt19937_64 rng(20240611);
  std::shuffle(keys.begin(), keys.end(), rng);
  bad = 0;
  checks = 0;
  for (const auto& key : keys) {
    if (checks >= 200) break;
    if (key.point_count() < 2) continue;
    ++checks;
    Rational first = engine.apply_dvv_at(key.genus, key.exponents, 0);
    for (std::size_t i = 1; i < static_cast<std::size_t>(key.point_count()); ++i)
      if (engine.apply_dvv_at(key.genus, key.exponents, i) != first) {
        ++bad;
        break;
      }
  }
  c.add("recursion independent of pivot", bad == 0, count_detail(checks, bad));
  return c.take();
}

std::vector<VerifyLine> walk_suite(const RunConfig& config,
                                   const correlators::CorrelatorEngine& engine) {
  Collector c("walk");
  auto decay = walk::verify_tilted_decay(8, 150);
  c.add("tilted decay, 3 <= n <= 8, t <= 150", decay.holds(),
        count_detail(decay.checks, decay.violations.size()));

  int bad = 0;
  for (int n = 3; n <= 8; ++n)
    for (int t = 0; t <= 40; ++t) bad += walk::walk_distribution(n, t).total() != 1;
  c.add("mass conservation", bad == 0, count_detail(6 * 41, bad));

  auto sandwich = walk_sandwich(engine, config.max_dim);
  c.add("f <= <d> <= F on computed keys", sandwich.holds(),
        std::to_string(sandwich.lower_checks) + " lower, " +
            std::to_string(sandwich.upper_checks) + " upper, " +
            std::to_string(sandwich.violations.size()) + " failures");
  return c.take();
}

std::vector<VerifyLine> harmonic_suite(const RunConfig& config) {
  Collector c("harmonic");
  auto z = harmonic::verify_Z_inequalities(4, 60, {200, 1000}, config.precision);
  c.add("Z_k inequalities", z.holds(),
        std::to_string(z.upper_bound_checks + z.cumulative_checks + z.product_sum_checks +
                       z.float_checks) +
            " checks, " + std::to_string(z.failures.size()) + " failures");

  auto series = harmonic::phi_series(8, config.precision);
  double worst = 0;
  for (int j = 0; j <= 8; ++j) {
    auto contour = harmonic::phi_contour(j);
    worst = std::max(worst, std::abs(static_cast<double>(series.values[j]) - contour.value));
  }
  std::ostringstream detail;
  detail << "max difference " << worst;
  c.add("phi series agrees with contour, j <= 8", worst < 1e-8, detail.str());
  return c.take();
}

std::vector<VerifyLine> graph_suite() {
  Collector c("graphs");
  const std::vector<std::tuple<int, int, std::size_t>> counts = {
      {0, 3, 1}, {1, 1, 2}, {2, 0, 7}};
  for (auto [g, n, expected] : counts) {
    auto found = graphs::enumerate_stable_graphs(g, n).size();
    c.add("|G_{" + std::to_string(g) + "," + std::to_string(n) + "}| = " +
              std::to_string(expected),
          found == expected, "found " + std::to_string(found));
  }

  // Canonical keys must be invariant under relabeling.
  std::mt19937_64 rng(7);
  int bad = 0, checks = 0;
  for (auto [g, n] : {std::pair{2, 1}, std::pair{3, 0}}) {
    for (const auto& entry : graphs::enumerate_stable_graphs(g, n)) {
      std::vector<std::size_t> order(entry.graph.vertex_count());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      ++checks;
      bad += graphs::canonical_form(entry.graph.relabeled(order)) !=
             graphs::canonical_form(entry.graph);
    }
  }
  c.add("canonical form relabeling invariance", bad == 0, count_detail(checks, bad));
  return c.take();
}

std::vector<VerifyLine> volume_suite(const RunConfig& config,
                                     const correlators::CorrelatorEngine& engine) {
  Collector c("volumes");
  volumes::VolumeCalculator calc(engine, {config.threads});
  c.add("Vol Q_{1,1} = 2/3 pi^2", calc.volume(1, 1) == PiValue(Rational(2, 3), 2));
  c.add("Vol Q_{0,4} = 2 pi^2", calc.volume(0, 4) == PiValue(Rational(2), 2));
  c.add("Vol Q_{2,0} = pi^6/15", calc.volume(2, 0) == PiValue(Rational(1, 15), 6));

  int bad = 0, checks = 0;
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 2; ++n) {
      if (2 * g + n < 4 && !(g == 1 && n == 1)) continue;
      const auto& b = calc.breakdown(g, n);
      PiValue sum;
      for (const auto& [key, part] : b.strata) sum += part;
      auto mono = b.total.monomial();
      ++checks;
      bad += !(mono && mono->first == 6 * g + 2 * n - 6 && sum == b.total);
    }
  c.add("pi-degree and strata partition, g <= 3, n <= 2", bad == 0, count_detail(checks, bad));

  bad = 0;
  checks = 0;
  for (int g = 1; g <= 3; ++g)
    for (int n = 0; n <= 2; ++n)
      for (int E = 1; E <= g && 2 * g + n >= 3; ++E) {
        ++checks;
        bad += volumes::one_vertex_pipeline(engine, g, n, E) !=
               volumes::one_vertex_closed_form(engine, g, n, E);
      }
  c.add("one-vertex closed form, g <= 3, n <= 2, all E", bad == 0, count_detail(checks, bad));
  return c.take();
}

std::vector<VerifyLine> svc_suite(const RunConfig& config,
                                  const correlators::CorrelatorEngine& engine) {
  Collector c("svc");
  volumes::VolumeCalculator calc(engine, {config.threads});
  auto d = siegel_veech::c_area(calc, 2, 0);
  c.add("c_area(2,0) = 19/(6 pi^2)", d.c_area == PiValue(Rational(19, 6), -2));
  c.add("Lyapunov sum (2,0) = 4/3", siegel_veech::lyapunov_sum(d) == PiValue(Rational(4, 3), 0));
  int bad = 0;
  for (int g = 2; g <= 3; ++g)
    for (int n = 0; n <= 1; ++n) {
      auto e = siegel_veech::c_area(calc, g, n);
      bad += !e.kappa2.is_zero();
      bad += e.kappa1 != siegel_veech::kappa1_unordered(calc, g, n);
    }
  c.add("kappa2 = 0 for n <= 1; ordered and unordered kappa1 agree", bad == 0);
  return c.take();
}

std::vector<VerifyLine> inequality_suite(const RunConfig& config) {
  Collector c("inequalities");
  int bad = 0, checks = 0;
  for (int m = 1; m <= 3; ++m)
    for (int A = 0; A <= 6; ++A)
      for (int B = 0; B <= 6; ++B)
        for (int C = 0; C <= 6; ++C) {
          ++checks;
          bad += !numeric::verify_composition_factorial_inequality(m, A, B, C).holds;
        }
  c.add("composition factorial inequality", bad == 0, count_detail(checks, bad));

  bad = 0;
  checks = 0;
  for (int rows = 1; rows <= 3; ++rows)
    for (int cols = 1; cols <= 3; ++cols) {
      const int cells = rows * cols;
      int total = 1;
      for (int i = 0; i < cells; ++i) total *= 4;
      for (int code = 0; code < total; ++code) {
        std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
        int x = code;
        for (int i = 0; i < cells; ++i, x /= 4) grid[i / cols][i % cols] = x % 4;
        ++checks;
        bad += !numeric::verify_multinomial_product_inequality(grid).holds;
      }
    }
  c.add("multinomial product inequality", bad == 0, count_detail(checks, bad));

  bad = 0;
  checks = 0;
  for (const auto& R : {Rational(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)})
    for (const auto& delta : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)}) {
      Rational threshold = (1 + 2 * delta) * R;
      int K0 = static_cast<int>(mpz_class(threshold.get_num() / threshold.get_den()).get_si()) + 1;
      for (int K = K0; K < K0 + 10; ++K) {
        ++checks;
        bad += !numeric::verify_taylor_tail_bound(R, delta, K, config.precision).holds;
      }
    }
  c.add("Taylor tail bound", bad == 0, count_detail(checks, bad));
  return c.take();
}

}  // namespace

std::vector<VerifyLine> verify_suite(const RunConfig& config,
                                     const correlators::CorrelatorEngine& engine) {
  numeric::ScopedDigits guard(config.precision);
  std::vector<VerifyLine> out;
  auto append = [&](std::vector<VerifyLine> lines) {
    out.insert(out.end(), std::make_move_iterator(lines.begin()),
               std::make_move_iterator(lines.end()));
  };
  const auto& s = config.suite;
  const bool all = s == "all";
  if (all || s == "inequalities") append(inequality_suite(config));
  if (all || s == "correlators") append(correlator_suite(config, engine));
  if (all || s == "walk") append(walk_suite(config, engine));
  if (all || s == "harmonic") append(harmonic_suite(config));
  if (all || s == "graphs") append(graph_suite());
  if (all || s == "volumes") append(volume_suite(config, engine));
  if (all || s == "svc") append(svc_suite(config, engine));
  return out;
}

}  // namespace moduli::cli
