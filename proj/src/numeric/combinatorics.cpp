#include "moduli/numeric/combinatorics.hpp"

#include "moduli/numeric/errors.hpp"

#include <numeric>
#include <string>

namespace moduli::numeric {

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial of " + std::to_string(n));
  if (n <= 0) return 1;
  Integer out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("binomial with negative argument");
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(long top, std::span<const long> parts) {
  if (top < 0) throw DomainError("multinomial with negative top");
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw DomainError("multinomial with negative part");
    sum += p;
  }
  if (sum != top) throw DomainError("multinomial parts do not sum to the top argument");
  Integer out = 1;
  long running = 0;
  for (long p : parts) {
    running += p;
    out *= binomial(running, p);
  }
  return out;
}

Integer factorial_family(FactorialKind kind, std::span<const long> args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw DomainError("wrong number of arguments");
  };
  switch (kind) {
    case FactorialKind::factorial:
      need(1);
      return factorial(args[0]);
    case FactorialKind::double_factorial:
      need(1);
      return double_factorial(args[0]);
    case FactorialKind::binomial:
      need(2);
      return binomial(args[0], args[1]);
    case FactorialKind::multinomial:
      if (args.empty()) throw DomainError("multinomial needs a top argument");
      return multinomial(args[0], args.subspan(1));
  }
  throw DomainError("unknown factorial kind");
}

Integer count_compositions(const CompositionSpec& spec) {
  if (spec.length < 1 || spec.total < 0) throw DomainError("composition length must be positive");
  if (spec.positive) {
    if (spec.total < spec.length) return 0;
    return binomial(spec.total - 1, spec.length - 1);
  }
  return binomial(spec.total + spec.length - 1, spec.length - 1);
}

CompositionGenerator::CompositionGenerator(const CompositionSpec& spec) : spec_(spec) {
  if (spec.length < 1 || spec.total < 0) throw DomainError("composition length must be positive");
  int free_total = spec.positive ? spec.total - spec.length : spec.total;
  if (free_total < 0) {
    done_ = true;
    return;
  }
  work_.assign(static_cast<std::size_t>(spec.length), 0);
  work_.back() = free_total;
}

bool CompositionGenerator::advance_nonnegative() {
  // Rightmost position (excluding the last) with a nonzero suffix after it.
  int m = spec_.length;
  int suffix = work_[static_cast<std::size_t>(m - 1)];
  for (int i = m - 2; i >= 0; --i) {
    if (suffix > 0) {
      ++work_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m - 1; ++j) work_[static_cast<std::size_t>(j)] = 0;
      work_[static_cast<std::size_t>(m - 1)] = suffix - 1;
      return true;
    }
    suffix += work_[static_cast<std::size_t>(i)];
  }
  return false;
}

bool CompositionGenerator::next() {
  if (done_) return false;
  if (started_ && !advance_nonnegative()) {
    done_ = true;
    return false;
  }
  started_ = true;
  parts_ = work_;
  if (spec_.positive)
    for (int& p : parts_) ++p;
  return true;
}

}  // namespace moduli::numeric
