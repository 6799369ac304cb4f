#include "hzeta/numerics.hpp"

#include <cmath>
#include <string>

namespace hz::num {

namespace {

bool is_nonpositive_integer(const BigReal& x) { return x.sign() <= 0 && floor(x) == x; }

BigComplex complex_sin(const BigComplex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }

// log Gamma(w) for Re w large, by the Stirling series.
BigComplex stirling_log_gamma(const BigComplex& w, const BigReal& eps) {
  BigComplex result = (w - BigComplex(BigReal(1) / 2)) * log(w) - w + BigComplex(log(2 * pi()) / 2);
  BigComplex w2 = w * w;
  BigComplex wpow = w;
  BigReal previous_size;
  for (int k = 1; k < 400; ++k) {
    BigComplex term = BigComplex(BigReal(bernoulli_number(2 * k))) / (wpow * BigReal(2 * k * (2 * k - 1)));
    BigReal size = abs(term);
    if (k > 1 && size > previous_size) break;  // asymptotic series turned around
    result += term;
    if (size < eps * abs(result)) break;
    previous_size = size;
    wpow = wpow * w2;
  }
  return result;
}

}  // namespace

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex result(1);
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

BigReal gamma(const BigReal& x, int digits) {
  if (is_nonpositive_integer(x)) {
    throw Error(ErrorCode::gamma_pole, "gamma: pole at nonpositive integer " + x.to_string(10));
  }
  PrecisionScope scope(digits + kGuardDigits);
  return mpfr_gamma_value(x);
}

BigReal gamma(const Rational& x, int digits) {
  PrecisionScope scope(digits + kGuardDigits);
  return gamma(BigReal(x), digits);
}

BigComplex gamma(const BigComplex& z, int digits) {
  if (z.im.is_zero()) return BigComplex(gamma(z.re, digits));
  PrecisionScope scope(digits + 2 * kGuardDigits);
  BigReal half(BigReal(1) / 2);
  if (z.re < half) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    BigComplex one_minus = BigComplex(1) - z;
    return BigComplex(pi()) / (complex_sin(z * pi()) * gamma(one_minus, digits));
  }
  // Shift so that the Stirling series reaches the target before it diverges.
  long shift_to = static_cast<long>(std::ceil(1.2 * (digits + kGuardDigits))) + 10;
  BigComplex w = z;
  BigComplex product(1);
  while (w.re < BigReal(shift_to)) {
    product = product * w;
    w.re += BigReal(1);
  }
  BigReal eps = ten_to_minus(digits + kGuardDigits);
  return exp(stirling_log_gamma(w, eps)) / product;
}

}  // namespace hz::num
