#include "moduli/correlators/engine.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace moduli::correlators {

using numeric::binomial;
using numeric::double_factorial;
using numeric::factorial;

namespace {

bool is_base_key(int genus, const std::vector<int>& d) {
  return (genus == 0 && d == std::vector<int>{0, 0, 0}) || (genus == 1 && d == std::vector<int>{1});
}

std::vector<int> sorted_desc(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace

CorrelatorEngine::CorrelatorEngine() : cache_(std::make_shared<CorrelatorCache>()) {}

CorrelatorEngine::CorrelatorEngine(std::shared_ptr<CorrelatorCache> cache)
    : cache_(std::move(cache)) {
  if (!cache_) cache_ = std::make_shared<CorrelatorCache>();
}

Rational CorrelatorEngine::normalized(int genus, std::span<const int> exponents) const {
  return normalized(CorrelatorKey::make(genus, {exponents.begin(), exponents.end()}));
}

Rational CorrelatorEngine::normalized(const CorrelatorKey& key) const {
  return lookup(key.genus, key.exponents);
}

Rational CorrelatorEngine::raw(int genus, std::span<const int> exponents) const {
  Rational value = normalized(genus, exponents);
  return value / normalization_factor(genus, exponents);
}

Rational CorrelatorEngine::value_or_zero(int genus, std::vector<int> exponents) const {
  if (!is_valid_key(genus, exponents)) return 0;
  return lookup(genus, sorted_desc(std::move(exponents)));
}

Rational CorrelatorEngine::lookup(int genus, std::vector<int> d) const {
  if (is_base_key(genus, d)) return 1;
  CorrelatorKey key{genus, std::move(d)};
  if (auto hit = cache_->find(key)) return *hit;
  std::vector<int> rest(key.exponents.begin(), key.exponents.end() - 1);
  Rational value = eliminate(genus, key.exponents.back(), rest);
  cache_->insert(key, value);
  return value;
}

Rational CorrelatorEngine::apply_dvv_at(int genus, std::span<const int> exponents,
                                        std::size_t index) const {
  if (index >= exponents.size()) throw DomainError("apply_dvv_at: index out of range");
  CorrelatorKey key = CorrelatorKey::make(genus, {exponents.begin(), exponents.end()});
  if (is_base_key(key.genus, key.exponents)) return 1;
  std::vector<int> rest;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (i != index) rest.push_back(exponents[i]);
  return eliminate(genus, exponents[index], rest);
}

Rational CorrelatorEngine::eliminate(int g, int pivot, const std::vector<int>& rest) const {
  const int n = static_cast<int>(rest.size());
  const int k = pivot - 1;
  const long den = 6L * g + 2L * n - 3;

  if (k == -1) {
    // string equation
    Rational sum = 0;
    for (int j = 0; j < n; ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> d = rest;
      --d[j];
      sum += (2 * rest[j] + 1) * value_or_zero(g, std::move(d));
    }
    return sum / den;
  }
  if (k == 0) {
    // dilaton equation
    return numeric::make_rational(6L * g + 3L * n - 6, den) * value_or_zero(g, rest);
  }

  Rational total = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<int> d = rest;
    d[j] += k;
    total += (2 * rest[j] + 1) * value_or_zero(g, std::move(d));
  }
  total /= den;

  if (g >= 1) {
    Rational loop = 0;
    for (int r = 0; r < k; ++r) {
      std::vector<int> d = rest;
      d.push_back(r);
      d.push_back(k - 1 - r);
      loop += value_or_zero(g - 1, std::move(d));
    }
    total += numeric::make_rational(12L * g, den * (6L * g + 2L * n - 5)) * loop;
  }

  // Splitting term over ordered pairs (I, J) covering the remaining points.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<int> subset_sum(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask)
    subset_sum[mask] = subset_sum[mask & (mask - 1)] + rest[std::countr_zero(mask)];
  const int rest_sum = subset_sum[masks - 1];
  const Integer top = double_factorial(den);

  Rational split = 0;
  for (int r = 0; r < k; ++r) {
    const int s = k - 1 - r;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const int n1 = std::popcount(mask);
      const int n2 = n - n1;
      const int a = subset_sum[mask] + r + 2 - n1;
      const int b = rest_sum - subset_sum[mask] + s + 2 - n2;
      if (a < 0 || b < 0 || a % 3 != 0 || b % 3 != 0) continue;
      const int g1 = a / 3;
      const int g2 = b / 3;
      if (2 * g1 + n1 + 1 < 3 || 2 * g2 + n2 + 1 < 3) continue;
      std::vector<int> left{r};
      std::vector<int> right{s};
      for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(rest[i]);
      Rational c1 = value_or_zero(g1, std::move(left));
      if (c1 == 0) continue;
      Rational c2 = value_or_zero(g2, std::move(right));
      if (c2 == 0) continue;
      Integer weight = binomial(g, g1) * double_factorial(6L * g1 + 2L * n1 - 3) *
                       double_factorial(6L * g2 + 2L * n2 - 3);
      split += numeric::make_rational(weight, top) * c1 * c2;
    }
  }
  total += split / 2;
  return total;
}

Rational normalization_factor(int genus, std::span<const int> exponents) {
  Integer num = numeric::power(Integer(24), static_cast<unsigned long>(genus)) * factorial(genus);
  long total = 0;
  for (int d : exponents) {
    num *= double_factorial(2L * d + 1);
    total += d;
  }
  return numeric::make_rational(num, double_factorial(2 * total + 1));
}

Rational dilaton_chain(int genus, int points) {
  if (genus < 1 || points < 1) throw DomainError("dilaton_chain needs g >= 1 and n >= 1");
  Rational out = 1;
  for (int j = 1; j < points; ++j)
    out *= numeric::make_rational(6L * genus + 3L * j - 6, 6L * genus + 2L * j - 3);
  return out;
}

Rational genus_zero_closed_form(int points) {
  if (points < 3) throw DomainError("genus-zero closed form needs n >= 3");
  return numeric::make_rational(
      numeric::power(Integer(3), static_cast<unsigned long>(points - 3)) * factorial(points - 3),
      double_factorial(2L * points - 5));
}

}  // namespace moduli::correlators
