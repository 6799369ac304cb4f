#include "hzeta/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace hz::num {

namespace {

thread_local long t_working_bits = 0;

long default_bits() { return digits_to_bits(kDefaultDigits + kGuardDigits); }

}  // namespace

long digits_to_bits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 4;
}

long working_bits() {
  if (t_working_bits == 0) t_working_bits = default_bits();
  return t_working_bits;
}

int working_digits() { return static_cast<int>((working_bits() - 4) / 3.3219280948873623); }

PrecisionScope::PrecisionScope(int digits) : saved_(working_bits()) {
  t_working_bits = digits_to_bits(digits);
}

PrecisionScope::PrecisionScope(BitsTag, long bits) : saved_(working_bits()) {
  t_working_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

PrecisionScope PrecisionScope::bits(long bits) { return PrecisionScope(BitsTag{}, bits); }

PrecisionScope::~PrecisionScope() { t_working_bits = saved_; }

BigReal::BigReal(NoInit, long bits) { mpfr_init2(value_, bits); }

BigReal make_uninit() { return BigReal(BigReal::NoInit{}, working_bits()); }

BigReal::BigReal() : BigReal(NoInit{}, working_bits()) { mpfr_set_zero(value_, 1); }
BigReal::BigReal(int v) : BigReal(NoInit{}, working_bits()) { mpfr_set_si(value_, v, MPFR_RNDN); }
BigReal::BigReal(long v) : BigReal(NoInit{}, working_bits()) { mpfr_set_si(value_, v, MPFR_RNDN); }
BigReal::BigReal(long long v) : BigReal(NoInit{}, working_bits()) {
  static_assert(sizeof(long long) == sizeof(long));
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}
BigReal::BigReal(unsigned long v) : BigReal(NoInit{}, working_bits()) {
  mpfr_set_ui(value_, v, MPFR_RNDN);
}
BigReal::BigReal(double v) : BigReal(NoInit{}, working_bits()) { mpfr_set_d(value_, v, MPFR_RNDN); }

BigReal::BigReal(std::string_view decimal) : BigReal(NoInit{}, working_bits()) {
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("BigReal: malformed decimal string '" + s + "'");
  }
}

BigReal::BigReal(const Rational& q) : BigReal(NoInit{}, working_bits()) {
  mpfr_set_q(value_, q.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(const Integer& z) : BigReal(NoInit{}, working_bits()) {
  mpfr_set_z(value_, z.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) : BigReal(NoInit{}, o.precision_bits()) {
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept : BigReal(NoInit{}, MPFR_PREC_MIN) { mpfr_swap(value_, o.value_); }

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision_bits());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal BigReal::operator-() const {
  BigReal r = make_uninit();
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r = make_uninit();
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r = make_uninit();
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal r = make_uninit();
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

long BigReal::exponent() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(value_)); }

double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
long BigReal::to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

std::string BigReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigReal::to_fixed(int decimals) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

template <class F>
BigReal unary(const BigReal& x, F f) {
  BigReal r = make_uninit();
  f(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal cbrt(const BigReal& x) { return unary(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log10(const BigReal& x) { return unary(x, mpfr_log10); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal tan(const BigReal& x) { return unary(x, mpfr_tan); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal mpfr_gamma_value(const BigReal& x) { return unary(x, mpfr_gamma); }
BigReal riemann_zeta(const BigReal& s) { return unary(s, mpfr_zeta); }

BigReal lgamma_abs(const BigReal& x) {
  BigReal r;
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pi() {
  BigReal r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal euler_gamma() {
  BigReal r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

BigReal log2_const() {
  BigReal r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

BigReal ten_to_minus(int digits) {
  BigReal r;
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(digits < 0 ? -digits : digits), MPFR_RNDN);
  return digits >= 0 ? BigReal(1) / r : r;
}

bool approx_equal(const BigReal& a, const BigReal& b, const BigReal& tol) {
  BigReal scale = max(BigReal(1), abs(b));
  return abs(a - b) <= tol * scale;
}

bool approx_equal_rel(const BigReal& a, const BigReal& b, const BigReal& rel_tol) {
  return abs(a - b) <= rel_tol * abs(b);
}

int digits_agreed(const BigReal& a, const BigReal& b) {
  BigReal diff = abs(a - b);
  if (diff.is_zero()) return working_digits();
  BigReal scale = max(abs(a), abs(b));
  if (scale.is_zero()) return working_digits();
  double d = -log10(diff / scale).to_double();
  if (d < 0) return 0;
  return static_cast<int>(std::floor(d));
}

}  // namespace hz::num
