#pragma once

#include "moduli/numeric/bigfloat.hpp"
#include "moduli/numeric/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace moduli::numeric {

// Finite Laurent polynomial sum_k c_k pi^k with exact rational coefficients.
class PiValue {
 public:
  PiValue() = default;
  explicit PiValue(const Rational& coefficient, int pi_power = 0);

  static PiValue pi_power(int k) { return PiValue(Rational(1), k); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int pi_power) const;

  // (power, coefficient) when the value is a single nonzero monomial.
  std::optional<std::pair<int, Rational>> monomial() const;

  PiValue& operator+=(const PiValue& other);
  PiValue& operator-=(const PiValue& other);
  PiValue& operator*=(const PiValue& other);
  PiValue& operator*=(const Rational& scalar);
  // Only monomial divisors are supported; anything else throws DomainError.
  PiValue& operator/=(const PiValue& other);

  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
  friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
  friend PiValue operator*(PiValue a, const Rational& s) { return a *= s; }
  friend PiValue operator*(const Rational& s, PiValue a) { return a *= s; }
  friend PiValue operator/(PiValue a, const PiValue& b) { return a /= b; }
  PiValue operator-() const;
  friend bool operator==(const PiValue&, const PiValue&) = default;

  // Evaluated at the precision of the enclosing ScopedDigits.
  BigFloat to_float() const;
  BigFloat to_float(unsigned digits) const;

  // "c * pi^k + ..." in descending k; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(int k, const Rational& c);

  std::map<int, Rational> terms_;
};

// zeta(s) = (-1)^{s/2+1} B_s (2 pi)^s / (2 s!) for even s >= 2.
PiValue zeta_even(int s);
Rational zeta_even_coefficient(int s);

}  // namespace moduli::numeric
