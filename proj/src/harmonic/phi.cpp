#include "moduli/harmonic/harmonic.hpp"

#include "moduli/numeric/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace moduli::harmonic {

PhiCoefficients phi_series(int J, unsigned digits) {
  if (J < 0) throw DomainError("phi_series needs J >= 0");
  numeric::ScopedDigits guard(digits + 10);
  const std::size_t size = static_cast<std::size_t>(J + 1);

  // log Gamma(1-s) = gamma s + sum_{i>=2} zeta(i) s^i / i
  std::vector<BigFloat> log_gamma(size, BigFloat(0));
  if (J >= 1) log_gamma[1] = numeric::euler_gamma_float();
  for (int i = 2; i <= J; ++i) log_gamma[i] = numeric::zeta_float(static_cast<unsigned long>(i)) / i;

  // e_n = (1/n) sum_{i=1}^n i l_i e_{n-i}
  std::vector<BigFloat> gamma_series(size, BigFloat(0));
  gamma_series[0] = 1;
  for (int n = 1; n <= J; ++n) {
    BigFloat acc = 0;
    for (int i = 1; i <= n; ++i) acc += i * log_gamma[i] * gamma_series[n - i];
    gamma_series[n] = acc / n;
  }

  // sin(pi s)/pi = sum_m (-1)^m pi^{2m} s^{2m+1} / (2m+1)!
  BigFloat pi = numeric::pi_float();
  std::vector<BigFloat> sine(size, BigFloat(0));
  BigFloat term = 1;
  for (int p = 1; p <= J; p += 2) {
    sine[p] = term;
    term *= -pi * pi / ((p + 1) * (p + 2));
  }

  PhiCoefficients out;
  out.max_order = J;
  out.method = PhiMethod::series;
  BigFloat factorial = 1;
  for (int j = 0; j <= J; ++j) {
    if (j > 0) factorial *= j;
    BigFloat coefficient = 0;
    for (int p = 1; p <= j; p += 2) coefficient += sine[p] * gamma_series[j - p];
    out.values.push_back(factorial * coefficient);
  }
  return out;
}

namespace {

using Complex = std::complex<double>;
using Gauss = boost::math::quadrature::gauss<double, 20>;

Complex integrate_panels(const std::function<Complex(double)>& f, double a, double b, int panels) {
  Complex sum = 0;
  double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    sum += Gauss::integrate([&](double x) { return f(x).real(); }, lo, lo + h);
    sum += Complex(0, Gauss::integrate([&](double x) { return f(x).imag(); }, lo, lo + h));
  }
  return sum;
}

}  // namespace

ContourResult phi_contour(int j, const QuadratureParams& params) {
  if (j < 0) throw DomainError("phi_contour needs j >= 0");
  if (params.t_max <= j + 1 || params.panels < 1 || params.arc_panels < 1)
    throw DomainError("phi_contour: unusable quadrature parameters");
  const Complex I(0, 1);
  auto integrand = [j](Complex t) { return std::pow(-std::log(-t), j) * std::exp(-t); };

  // For x >= T: |log(-t)| <= ln(x+1) + pi, and ln(x+1) is concave, so the
  // tail of each ray is below e^{-T} (ln(T+1)+pi)^j / (1 - j/(T+1)).
  const double T = params.t_max;
  const double ray_tail =
      std::exp(-T) * std::pow(std::log(T + 1) + std::numbers::pi, j) / (1.0 - j / (T + 1));
  ContourResult result;
  result.tail_bound = 2 * ray_tail / (2 * std::numbers::pi);
  if (result.tail_bound > params.tolerance)
    throw AccuracyError("phi_contour: tail bound above tolerance", result.tail_bound);

  // Incoming ray Im t = -1 traversed from Re t = T down to 0.
  Complex lower = -integrate_panels([&](double x) { return integrand(Complex(x, -1)); }, 0, T,
                                    params.panels);
  // Arc t = e^{i theta}, theta from 3pi/2 down to pi/2.
  Complex arc = -integrate_panels(
      [&](double theta) {
        Complex t = std::exp(I * theta);
        return integrand(t) * I * t;
      },
      std::numbers::pi / 2, 3 * std::numbers::pi / 2, params.arc_panels);
  // Outgoing ray Im t = +1.
  Complex upper = integrate_panels([&](double x) { return integrand(Complex(x, 1)); }, 0, T,
                                   params.panels);

  Complex value = (lower + arc + upper) / (2 * std::numbers::pi * I);
  result.value = value.real();
  result.imaginary_residual = value.imag();
  return result;
}

}  // namespace moduli::harmonic
