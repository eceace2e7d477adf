#include "moduli/correlators/key.hpp"

#include "moduli/numeric/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace moduli::correlators {

CorrelatorKey CorrelatorKey::make(int genus, std::vector<int> exponents) {
  int n = static_cast<int>(exponents.size());
  if (genus < 0) throw DomainError("negative genus");
  if (n == 0) throw DomainError("a correlator needs at least one point");
  if (std::any_of(exponents.begin(), exponents.end(), [](int d) { return d < 0; }))
    throw DomainError("negative exponent");
  if (2 * genus + n < 3) throw DomainError("unstable (g, n): 2g + n < 3");
  int total = std::accumulate(exponents.begin(), exponents.end(), 0);
  if (total != 3 * genus + n - 3)
    throw DimensionError("|d| = " + std::to_string(total) + " but 3g + n - 3 = " +
                         std::to_string(3 * genus + n - 3));
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return CorrelatorKey{genus, std::move(exponents)};
}

int CorrelatorKey::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::size_t CorrelatorKeyHash::operator()(const CorrelatorKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.genus);
  for (int d : key.exponents) h = h * 1000003u ^ std::hash<int>{}(d + 0x9e37);
  return h;
}

bool is_valid_key(int genus, std::span<const int> exponents) {
  int n = static_cast<int>(exponents.size());
  if (genus < 0 || n == 0 || 2 * genus + n < 3) return false;
  int total = 0;
  for (int d : exponents) {
    if (d < 0) return false;
    total += d;
  }
  return total == 3 * genus + n - 3;
}

std::string to_string(const CorrelatorKey& key) {
  std::string out = std::to_string(key.genus) + "|";
  for (std::size_t i = 0; i < key.exponents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(key.exponents[i]);
  }
  return out;
}

namespace {

// Partitions of total into exactly `parts` entries (zeros allowed), descending.
void partitions(int total, int parts, int cap, std::vector<int>& prefix,
                const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 0) {
    if (total == 0) emit(prefix);
    return;
  }
  int hi = std::min(total, cap);
  for (int x = hi; x >= 0; --x) {
    if (static_cast<long>(x) * parts < total) break;
    prefix.push_back(x);
    partitions(total - x, parts - 1, x, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CorrelatorKey> all_keys(int max_dim) {
  std::vector<CorrelatorKey> out;
  for (int g = 0; 3 * g - 2 <= max_dim; ++g) {
    for (int n = 1; 3 * g + n - 3 <= max_dim; ++n) {
      if (2 * g + n < 3) continue;
      std::vector<int> prefix;
      partitions(3 * g + n - 3, n, 3 * g + n - 3, prefix,
                 [&](const std::vector<int>& d) { out.push_back(CorrelatorKey{g, d}); });
    }
  }
  return out;
}

}  // namespace moduli::correlators
