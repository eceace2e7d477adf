#include "moduli/correlators/checks.hpp"

#include "moduli/numeric/errors.hpp"

namespace moduli::correlators {

BoundCheckReport exhaustive_bound_check(const CorrelatorEngine& engine, int max_dim) {
  BoundCheckReport report;
  const Rational two_thirds = numeric::make_rational(2, 3);
  for (const auto& key : all_keys(max_dim)) {
    Rational value = engine.normalized(key);
    Rational ratio = value * numeric::power(two_thirds, key.point_count() - 1);
    if (report.keys_checked == 0 || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = key;
    }
    if (ratio > 1) report.violations.push_back(key);
    ++report.keys_checked;
  }
  return report;
}

TwoPointReport two_point_scan(const CorrelatorEngine& engine, int genus) {
  if (genus < 1) throw DomainError("two_point_scan needs g >= 1");
  TwoPointReport report;
  report.genus = genus;
  report.lower_bound = numeric::make_rational(6L * genus - 3, 6L * genus - 1);
  report.holds = true;
  for (int k = 0; k <= 3 * genus - 1; ++k) {
    std::vector<int> d{k, 3 * genus - 1 - k};
    Rational value = engine.normalized(genus, d);
    if (k == 0 || value < report.min_value) report.min_value = value;
    if (k == 0 || value > report.max_value) report.max_value = value;
    if (value < report.lower_bound || value > 1) report.holds = false;
    report.values.push_back(value);
  }
  return report;
}

}  // namespace moduli::correlators
