#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace moduli::correlators {

// (g, d) with d sorted descending. Construct through make() to validate.
struct CorrelatorKey {
  int genus = 0;
  std::vector<int> exponents;

  // Throws DimensionError when |d| != 3g+n-3 and DomainError when
  // 2g+n < 3, n = 0, g < 0 or an entry is negative.
  static CorrelatorKey make(int genus, std::vector<int> exponents);

  int point_count() const { return static_cast<int>(exponents.size()); }
  int degree() const;

  friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;
  friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
};

struct CorrelatorKeyHash {
  std::size_t operator()(const CorrelatorKey& key) const noexcept;
};

// True when (g, d) is a valid key in any order.
bool is_valid_key(int genus, std::span<const int> exponents);

// "g|d1,...,dn"
std::string to_string(const CorrelatorKey& key);

// Every valid key with 3g+n-3 <= max_dim, ordered by (g, n, d).
std::vector<CorrelatorKey> all_keys(int max_dim);

}  // namespace moduli::correlators
