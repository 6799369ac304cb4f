#include "hzeta/numerics.hpp"

#include <cmath>
#include <string>

namespace hz::num {

BigReal airy_taylor_coefficient(int n, int digits) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "airy_taylor_coefficient: n must be >= 0");
  // sin(2(n+1)pi/3) cycles through sqrt3/2, -sqrt3/2, 0.
  int phase = n % 3;
  if (phase == 2) return BigReal(0);
  PrecisionScope scope(digits + kGuardDigits);
  BigReal sine = sqrt(BigReal(3)) / 2;
  if (phase == 1) sine = -sine;
  BigReal three_pow = pow(BigReal(3), BigReal(Rational(n - 2, 3)));
  return three_pow / pi() * sine * gamma(Rational(n + 1, 3), digits);
}

namespace {

struct Attempt {
  BigReal value;
  bool certified;
};

// Large positive x: Ai ~ e^-z/(2 sqrt(pi) x^1/4) sum (-1)^k u_k z^-k, z = 2/3 x^3/2.
// The remainder is bounded by the first neglected term.
Attempt airy_asymptotic(const BigReal& x, int derivative, int digits) {
  PrecisionScope scope(digits + kGuardDigits);
  BigReal eps = ten_to_minus(digits + 2);
  BigReal z = 2 * pow(x, BigReal(Rational(3, 2))) / 3;
  BigReal inv_z = BigReal(1) / z;
  BigReal u(1);
  BigReal zpow(1);
  BigReal sum(1);
  BigReal last_size(1);
  bool certified = false;
  for (long k = 1; k < 2000; ++k) {
    u = u * BigReal((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / BigReal((2 * k - 1) * 216 * k);
    zpow = zpow * inv_z;
    BigReal coeff = derivative == 0 ? u : -u * BigReal(6 * k + 1) / BigReal(6 * k - 1);
    BigReal term = coeff * zpow;
    if (k % 2 == 1) term = -term;
    BigReal size = abs(term);
    if (size < eps * abs(sum)) {
      certified = true;
      break;
    }
    if (size > last_size) break;
    sum += term;
    last_size = size;
  }
  BigReal prefactor = exp(-z) / (2 * sqrt(pi()));
  BigReal quarter = pow(x, BigReal(Rational(1, 4)));
  BigReal value = derivative == 0 ? prefactor / quarter * sum : -prefactor * quarter * sum;
  return {value, certified};
}

BigReal airy_taylor(const BigReal& x, int derivative, int digits) {
  double ax = std::fabs(x.to_double());
  double z = 2.0 / 3.0 * std::pow(ax, 1.5);
  // Terms grow like e^z while Ai itself decays like e^-z for x > 0.
  int extra = static_cast<int>(std::ceil((x.sign() > 0 ? 2.0 : 1.0) * z / std::log(10.0))) + 5;
  if (extra > 20000) {
    throw Error(ErrorCode::precision_unreachable,
                "airy_eval: cancellation at x = " + x.to_string(12) + " needs more than 20000 guard digits");
  }
  int work = digits + kGuardDigits + extra;
  PrecisionScope scope(work);
  BigReal a0 = airy_taylor_coefficient(0, work);
  BigReal a1 = airy_taylor_coefficient(1, work);
  if (x.is_zero()) return derivative == 0 ? a0 : a1;
  BigReal eps = ten_to_minus(work);
  BigReal x3 = x * x * x;
  // a_{3k} and a_{3k+1}: Taylor coefficients of Ai, a_{n+3} = a_n/((n+2)(n+3)).
  BigReal c0 = a0;
  BigReal c1 = a1;
  BigReal xp(1);  // x^{3k}
  BigReal sum(0);
  for (long k = 0; k < 200000; ++k) {
    BigReal t;
    if (derivative == 0) {
      t = c0 * xp + c1 * xp * x;
    } else {
      t = (k == 0 ? BigReal(0) : c0 * BigReal(3 * k) * xp / x) + c1 * BigReal(3 * k + 1) * xp;
    }
    sum += t;
    double ratio = std::fabs(x3.to_double()) / (9.0 * (k + 1.0) * (k + 1.0));
    if (k > 2 && ratio < 0.5 && abs(t) <= eps * abs(sum)) break;
    c0 = c0 / BigReal((3 * k + 2) * (3 * k + 3));
    c1 = c1 / BigReal((3 * k + 3) * (3 * k + 4));
    xp = xp * x3;
  }
  return sum;
}

}  // namespace

AiryValue airy_eval_detailed(const BigReal& x, int derivative, int digits) {
  if (derivative != 0 && derivative != 1) {
    throw Error(ErrorCode::invalid_argument, "airy_eval: derivative must be 0 or 1");
  }
  if (x.sign() > 0 && x.to_double() >= kAirySwitchover) {
    Attempt a = airy_asymptotic(x, derivative, digits);
    if (a.certified) {
      PrecisionScope scope(digits + kGuardDigits);
      return {a.value, AiryMethod::asymptotic};
    }
  }
  BigReal v = airy_taylor(x, derivative, digits);
  PrecisionScope scope(digits + kGuardDigits);
  BigReal rounded = v + BigReal(0);
  return {rounded, AiryMethod::taylor};
}

BigReal airy_eval(const BigReal& x, int derivative, int digits) {
  return airy_eval_detailed(x, derivative, digits).value;
}

}  // namespace hz::num
