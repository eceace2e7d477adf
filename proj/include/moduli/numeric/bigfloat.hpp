#pragma once

#include "moduli/numeric/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace moduli::numeric {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultFloatDigits = 60;

// Sets the working precision of newly created BigFloat values for the
// lifetime of the guard. The precision is process-wide.
class ScopedDigits {
 public:
  explicit ScopedDigits(unsigned digits);
  ~ScopedDigits();
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned previous_;
};

BigFloat to_float(const Rational& q);
BigFloat pi_float();
BigFloat euler_gamma_float();
// zeta(s) for integer s >= 2.
BigFloat zeta_float(unsigned long s);

// Closed interval with rational endpoints, certified to contain the value.
struct RationalInterval {
  Rational lower;
  Rational upper;
};

RationalInterval pi_enclosure(unsigned bits);
// x > 0.
RationalInterval log_enclosure(const Rational& x, unsigned bits);

}  // namespace moduli::numeric
