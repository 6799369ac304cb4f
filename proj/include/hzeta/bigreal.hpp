#ifndef HZETA_BIGREAL_HPP
#define HZETA_BIGREAL_HPP

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace hz {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

namespace num {

/// Decimal digits requested when a caller does not say otherwise.
inline constexpr int kDefaultDigits = 50;
/// Extra decimal digits carried internally on top of the requested precision.
inline constexpr int kGuardDigits = 10;

long digits_to_bits(int digits);

/// Working precision of the calling thread, in bits. New BigReal values and
/// the results of arithmetic are rounded to this precision.
long working_bits();
int working_digits();

/// RAII override of the calling thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  static PrecisionScope bits(long bits);
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
  ~PrecisionScope();

 private:
  struct BitsTag {};
  PrecisionScope(BitsTag, long bits);
  long saved_;
};

/// Arbitrary-precision real number backed by an MPFR value.
class BigReal {
 public:
  BigReal();
  BigReal(int v);
  BigReal(long v);
  BigReal(long long v);
  BigReal(unsigned long v);
  BigReal(double v);
  explicit BigReal(std::string_view decimal);
  explicit BigReal(const Rational& q);
  explicit BigReal(const Integer& z);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  long precision_bits() const { return mpfr_get_prec(value_); }

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  /// Exact comparison. Only meaningful for values known to be exact
  /// (small integers, zero); inexact values go through approx_equal.
  friend bool operator==(const BigReal& a, const BigReal& b);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| 2^-e < 1.
  long exponent() const;

  double to_double() const;
  long to_long() const;
  /// Scientific decimal string with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Fixed decimal string with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

 private:
  struct NoInit {};
  explicit BigReal(NoInit, long bits);
  friend BigReal make_uninit();
  template <class F>
  friend BigReal unary(const BigReal& x, F f);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal floor(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
/// Real Gamma via MPFR.
BigReal mpfr_gamma_value(const BigReal& x);
BigReal lgamma_abs(const BigReal& x);
/// Riemann zeta at real argument via MPFR.
BigReal riemann_zeta(const BigReal& s);

BigReal pi();
BigReal euler_gamma();
BigReal log2_const();
/// 10^(-digits), at working precision.
BigReal ten_to_minus(int digits);

/// |a - b| <= tol * max(1, |b|) for scale-aware tolerance, else absolute.
bool approx_equal(const BigReal& a, const BigReal& b, const BigReal& tol);
bool approx_equal_rel(const BigReal& a, const BigReal& b, const BigReal& rel_tol);
/// Number of leading decimal digits shared by a and b (relative measure).
int digits_agreed(const BigReal& a, const BigReal& b);

}  // namespace num
}  // namespace hz

#endif  // HZETA_BIGREAL_HPP
