#pragma once

#include "moduli/numeric/rational.hpp"

#include <span>
#include <vector>

namespace moduli::numeric {

Integer factorial(long n);
// (-1)!! = 1.
Integer double_factorial(long n);
// Zero when k > n.
Integer binomial(long n, long k);
// top! / prod(parts!), parts must sum to top.
Integer multinomial(long top, std::span<const long> parts);

enum class FactorialKind { factorial, double_factorial, binomial, multinomial };

// args: {n} | {n} | {n, k} | {top, parts...}
Integer factorial_family(FactorialKind kind, std::span<const long> args);

// C_m(N) when positive, K_m(N) otherwise.
struct CompositionSpec {
  int length = 1;
  int total = 0;
  bool positive = false;
};

Integer count_compositions(const CompositionSpec& spec);

// Lexicographic enumeration.
//
//   CompositionGenerator gen({3, 4, false});
//   while (gen.next()) use(gen.current());
class CompositionGenerator {
 public:
  explicit CompositionGenerator(const CompositionSpec& spec);

  bool next();
  const std::vector<int>& current() const { return parts_; }

 private:
  bool advance_nonnegative();

  CompositionSpec spec_;
  std::vector<int> parts_;
  std::vector<int> work_;
  bool started_ = false;
  bool done_ = false;
};

template <class Fn>
void for_each_composition(const CompositionSpec& spec, Fn&& fn) {
  CompositionGenerator gen(spec);
  while (gen.next()) fn(gen.current());
}

}  // namespace moduli::numeric
