#include "moduli/volumes/volumes.hpp"

#include "moduli/numeric/combinatorics.hpp"
#include "moduli/numeric/errors.hpp"

namespace moduli::volumes {

EdgePolynomial EdgePolynomial::constant(std::size_t variables, const Rational& c) {
  EdgePolynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

EdgePolynomial EdgePolynomial::variable(std::size_t variables, std::size_t index) {
  EdgePolynomial p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Rational EdgePolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void EdgePolynomial::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != variables_) throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

EdgePolynomial& EdgePolynomial::operator*=(const EdgePolynomial& other) {
  if (other.variables_ != variables_) throw DomainError("polynomials over different variables");
  EdgePolynomial product(variables_);
  Exponents e(variables_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      for (std::size_t i = 0; i < variables_; ++i) e[i] = e1[i] + e2[i];
      product.add_term(e, c1 * c2);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

EdgePolynomial& EdgePolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

EdgePolynomial n_polynomial_value(const CorrelatorEngine& engine, int genus,
                                  std::span<const int> slots, std::size_t variable_count) {
  const int m = static_cast<int>(slots.size());
  if (genus < 0 || 2 * genus + m < 3) throw DomainError("N_{g,n} needs 2g + n >= 3");
  const int D = 3 * genus + m - 3;

  std::vector<int> bound;  // variable index of each non-zero slot
  int zeros = 0;
  for (int s : slots) {
    if (s == kZeroSlot) {
      ++zeros;
    } else {
      if (s < 0 || static_cast<std::size_t>(s) >= variable_count)
        throw DomainError("slot refers to a missing variable");
      bound.push_back(s);
    }
  }

  const Rational prefactor = numeric::make_rational(
      numeric::double_factorial(6L * genus + 2L * m - 5),
      numeric::power(Integer(2), static_cast<unsigned long>(5 * genus + m - 3)) *
          numeric::power(Integer(3), static_cast<unsigned long>(genus)) * numeric::factorial(genus));

  EdgePolynomial out(variable_count);
  auto add = [&](const std::vector<int>& exponents) {
    std::vector<int> d = exponents;
    d.insert(d.end(), static_cast<std::size_t>(zeros), 0);
    Rational value = engine.value_or_zero(genus, d);
    if (value == 0) return;
    EdgePolynomial::Exponents e(variable_count, 0);
    Integer denominator = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      e[static_cast<std::size_t>(bound[i])] += 2 * exponents[i];
      denominator *= numeric::factorial(2L * exponents[i] + 1);
    }
    out.add_term(e, prefactor * value / Rational(denominator));
  };
  if (bound.empty()) {
    if (D == 0) add({});
  } else {
    numeric::for_each_composition({static_cast<int>(bound.size()), D, false}, add);
  }
  return out;
}

PiValue zeta_map(const EdgePolynomial& polynomial) {
  PiValue out;
  for (const auto& [exponents, c] : polynomial.terms()) {
    Rational coefficient = c;
    int pi_power = 0;
    for (int r : exponents) {
      if (r == 0) continue;
      if (r % 2 == 0)
        throw PipelineError("zeta map received the even exponent " + std::to_string(r));
      coefficient *= Rational(numeric::factorial(r)) * numeric::zeta_even_coefficient(r + 1);
      pi_power += r + 1;
    }
    out += PiValue(coefficient, pi_power);
  }
  return out;
}

}  // namespace moduli::volumes
