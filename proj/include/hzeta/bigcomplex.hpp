#ifndef HZETA_BIGCOMPLEX_HPP
#define HZETA_BIGCOMPLEX_HPP

#include "hzeta/bigreal.hpp"

namespace hz::num {

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  BigComplex(BigReal r) : re(std::move(r)), im(0) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int r) : re(r), im(0) {}

  static BigComplex polar(const BigReal& modulus, const BigReal& argument) {
    return {modulus * cos(argument), modulus * sin(argument)};
  }
  /// e^{i pi p/q}
  static BigComplex unit_root(long p, long q);

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }
  BigComplex operator-() const { return {-re, -im}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
  friend BigComplex operator*(const BigReal& b, const BigComplex& a) { return {a.re * b, a.im * b}; }
  friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re / b, a.im / b}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigReal abs(const BigComplex& z) { return sqrt(norm(z)); }
inline BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.re), z.im); }
/// Principal branch.
inline BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

inline BigComplex BigComplex::unit_root(long p, long q) {
  BigReal angle = pi() * BigReal(p) / BigReal(q);
  return {cos(angle), sin(angle)};
}

BigComplex pow(const BigComplex& z, long n);

}  // namespace hz::num

#endif  // HZETA_BIGCOMPLEX_HPP
