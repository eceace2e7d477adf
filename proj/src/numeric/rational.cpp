#include "moduli/numeric/rational.hpp"

#include "moduli/numeric/errors.hpp"

#include <cctype>

namespace moduli::numeric {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw FormatError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw FormatError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw FormatError("malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, long exponent) {
  if (exponent >= 0) {
    auto e = static_cast<unsigned long>(exponent);
    return make_rational(power(base.get_num(), e), power(base.get_den(), e));
  }
  if (base == 0) throw DomainError("zero raised to a negative power");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rational(power(base.get_den(), e), power(base.get_num(), e));
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace moduli::numeric
