#pragma once

#include "moduli/correlators/cache.hpp"
#include "moduli/correlators/key.hpp"
#include "moduli/numeric/rational.hpp"

#include <memory>
#include <span>
#include <vector>

namespace moduli::correlators {

using numeric::Integer;
using numeric::Rational;

// Normalized intersection numbers
//   <d>_{g,n} = 24^g g! prod (2d_i+1)!! / (2|d|+1)!! * <tau_d1 ... tau_dn>_g
// through the string, dilaton and Virasoro recursions, always eliminating
// the smallest entry. Safe to share between threads.
class CorrelatorEngine {
 public:
  CorrelatorEngine();
  explicit CorrelatorEngine(std::shared_ptr<CorrelatorCache> cache);

  Rational normalized(int genus, std::span<const int> exponents) const;
  Rational normalized(const CorrelatorKey& key) const;
  Rational raw(int genus, std::span<const int> exponents) const;

  // Same value computed by eliminating exponents[index] first.
  Rational apply_dvv_at(int genus, std::span<const int> exponents, std::size_t index) const;

  // Zero for anything that is not a valid key, in any order.
  Rational value_or_zero(int genus, std::vector<int> exponents) const;

  CorrelatorCache& cache() const { return *cache_; }
  std::shared_ptr<CorrelatorCache> shared_cache() const { return cache_; }

 private:
  Rational lookup(int genus, std::vector<int> sorted_desc) const;
  // Eliminates `pivot` from (pivot, rest) at genus g.
  Rational eliminate(int genus, int pivot, const std::vector<int>& rest) const;

  std::shared_ptr<CorrelatorCache> cache_;
};

// normalized <-> raw conversion factor 24^g g! prod(2d_i+1)!! / (2|d|+1)!!.
Rational normalization_factor(int genus, std::span<const int> exponents);

// prod_{j=1}^{n-1} (6g+3j-6)/(6g+2j-3) = <3g-2, 1^{n-1}>_{g,n}.
Rational dilaton_chain(int genus, int points);

// 3^{n-3} (n-3)! / (2n-5)!! = <1^{n-3}, 0^3>_{0,n}.
Rational genus_zero_closed_form(int points);

}  // namespace moduli::correlators
