#include "moduli/numeric/pi_value.hpp"

#include "moduli/numeric/bernoulli.hpp"
#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

#include <string>

namespace moduli::numeric {

PiValue::PiValue(const Rational& coefficient, int pi_power) { add_term(pi_power, coefficient); }

void PiValue::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational PiValue::coefficient(int pi_power) const {
  auto it = terms_.find(pi_power);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<int, Rational>> PiValue::monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

PiValue& PiValue::operator+=(const PiValue& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

PiValue& PiValue::operator-=(const PiValue& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

PiValue& PiValue::operator*=(const PiValue& other) {
  PiValue product;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : other.terms_) product.add_term(k1 + k2, c1 * c2);
  terms_ = std::move(product.terms_);
  return *this;
}

PiValue& PiValue::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

PiValue& PiValue::operator/=(const PiValue& other) {
  auto divisor = other.monomial();
  if (!divisor) throw DomainError("division by a non-monomial pi value");
  std::map<int, Rational> quotient;
  for (const auto& [k, c] : terms_) quotient.emplace(k - divisor->first, c / divisor->second);
  terms_ = std::move(quotient);
  return *this;
}

PiValue PiValue::operator-() const {
  PiValue out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

BigFloat PiValue::to_float() const {
  BigFloat pi = pi_float();
  BigFloat sum = 0;
  for (const auto& [k, c] : terms_) sum += numeric::to_float(c) * boost::multiprecision::pow(pi, k);
  return sum;
}

BigFloat PiValue::to_float(unsigned digits) const {
  ScopedDigits guard(digits);
  return to_float();
}

std::string PiValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += numeric::to_string(it->second);
    if (it->first != 0) out += " * pi^" + std::to_string(it->first);
  }
  return out;
}

Rational zeta_even_coefficient(int s) {
  if (s < 2 || s % 2 != 0)
    throw UnsupportedArgument("zeta is only supported at even arguments >= 2, got " +
                              std::to_string(s));
  Rational c = bernoulli(static_cast<unsigned>(s)) * Rational(power(Integer(2), s)) /
               Rational(2 * factorial(s));
  if ((s / 2) % 2 == 0) c = -c;
  return c;
}

PiValue zeta_even(int s) { return PiValue(zeta_even_coefficient(s), s); }

}  // namespace moduli::numeric
