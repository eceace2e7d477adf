#include "moduli/numeric/bigfloat.hpp"

#include "moduli/numeric/errors.hpp"

#include <mpfr.h>

namespace moduli::numeric {

ScopedDigits::ScopedDigits(unsigned digits) : previous_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits);
}

ScopedDigits::~ScopedDigits() { BigFloat::default_precision(previous_); }

BigFloat to_float(const Rational& q) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat pi_float() {
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat euler_gamma_float() {
  BigFloat out;
  mpfr_const_euler(out.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat zeta_float(unsigned long s) {
  if (s < 2) throw DomainError("zeta_float needs s >= 2");
  BigFloat out;
  mpfr_zeta_ui(out.backend().data(), s, MPFR_RNDN);
  return out;
}

namespace {

Rational to_rational(mpfr_srcptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

RationalInterval pi_enclosure(unsigned bits) {
  mpfr_t lo, hi;
  mpfr_inits2(bits, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  RationalInterval out{to_rational(lo), to_rational(hi)};
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

RationalInterval log_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw DomainError("log of a nonpositive number");
  // The argument itself is rounded outward before taking the log.
  mpfr_t lo, hi;
  mpfr_inits2(bits, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(lo, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo, lo, MPFR_RNDD);
  mpfr_log(hi, hi, MPFR_RNDU);
  RationalInterval out{to_rational(lo), to_rational(hi)};
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace moduli::numeric
