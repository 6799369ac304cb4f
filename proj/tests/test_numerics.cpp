#include <doctest.h>

#include "hzeta/numerics.hpp"

#include <array>
#include <cmath>

using namespace hz;
using namespace hz::num;

namespace {

BigReal tol(int digits) { return ten_to_minus(digits); }

// Bisection on a sign change: a test-side oracle independent of any solver.
BigReal bisect_root(auto&& f, BigReal lo, BigReal hi, int iterations) {
  BigReal flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    BigReal mid = (lo + hi) / 2;
    BigReal fm = f(mid);
    if ((fm.sign() < 0) == (flo.sign() < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("gamma at one half is sqrt(pi)") {
  PrecisionScope scope(60);
  BigReal g = gamma(Rational(1, 2), 50);
  CHECK(approx_equal(g, sqrt(pi()), tol(50)));
  CHECK(g.to_string(16) == "1.772453850905516e+00");
}

TEST_CASE("gamma rejects poles") {
  CHECK_THROWS_AS(gamma(BigReal(0)), Error);
  CHECK_THROWS_AS(gamma(BigReal(-3)), Error);
  try {
    gamma(BigReal(-2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::gamma_pole);
  }
  CHECK_NOTHROW(gamma(BigReal(-2.5)));
}

TEST_CASE("rho closed form from Gamma(2/3)") {
  PrecisionScope scope(60);
  BigReal g = gamma(Rational(2, 3), 50);
  BigReal rho = pow(BigReal(3), BigReal(Rational(5, 6))) / (2 * pi()) * g * g;
  CHECK(approx_equal_rel(rho, BigReal("0.729011133"), BigReal("6e-10")));
}

TEST_CASE("reflection identity on a grid of rationals at several precisions") {
  for (int p : {30, 50, 100}) {
    PrecisionScope scope(p + kGuardDigits);
    for (int num = -7; num <= 13; ++num) {
      for (int den : {3, 4, 7, 10}) {
        Rational x(num, den);
        if (denominator(x) == 1) continue;
        BigReal xr(x);
        BigReal lhs = gamma(x, p) * gamma(Rational(1) - x, p) * sin(pi() * xr) / pi();
        CHECK_MESSAGE(approx_equal(lhs, BigReal(1), tol(p - 5)), "p=", p, " x=", num, "/", den);
      }
    }
  }
}

TEST_CASE("complex gamma") {
  PrecisionScope scope(50);
  // Real axis agrees with MPFR.
  BigComplex r = gamma(BigComplex(BigReal(Rational(7, 3)), BigReal("1e-60")), 40);
  CHECK(approx_equal(r.re, gamma(Rational(7, 3), 40), tol(35)));
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  for (int yi : {1, 2, 5}) {
    BigReal y(yi);
    BigComplex g = gamma(BigComplex(BigReal(0), y), 40);
    CHECK(approx_equal(norm(g), pi() / (y * sinh(pi() * y)), tol(35)));
  }
  // Recurrence Gamma(z + 1) = z Gamma(z) off the axis.
  BigComplex z(BigReal("0.3"), BigReal("2.7"));
  BigComplex lhs = gamma(z + BigComplex(1), 40);
  BigComplex rhs = z * gamma(z, 40);
  CHECK(approx_equal(lhs.re, rhs.re, tol(35)));
  CHECK(approx_equal(lhs.im, rhs.im, tol(35)));
}

TEST_CASE("Airy Taylor coefficients at the origin") {
  PrecisionScope scope(40);
  CHECK(airy_taylor_coefficient(2, 30).is_zero());
  CHECK(airy_taylor_coefficient(5, 30).is_zero());
  // Oracle: the classical forms Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3).
  BigReal ai0 = pow(BigReal(3), BigReal(Rational(-2, 3))) / gamma(Rational(2, 3), 30);
  BigReal aip0 = -pow(BigReal(3), BigReal(Rational(-1, 3))) / gamma(Rational(1, 3), 30);
  CHECK(approx_equal(airy_taylor_coefficient(0, 30), ai0, tol(30)));
  CHECK(approx_equal(airy_taylor_coefficient(1, 30), aip0, tol(30)));
  CHECK(approx_equal(airy_taylor_coefficient(0, 30), BigReal("0.3550280538878172"), tol(15)));
  CHECK(approx_equal(airy_taylor_coefficient(1, 30), BigReal("-0.2588194037928068"), tol(15)));
  // Ai''' (0) = Ai(0) from Ai'' = x Ai differentiated once: Ai''' = Ai + x Ai'.
  CHECK(approx_equal(airy_taylor_coefficient(3, 30), ai0, tol(30)));
  // Ai''''(0) = 2 Ai'(0).
  CHECK(approx_equal(airy_taylor_coefficient(4, 30), 2 * aip0, tol(30)));
}

TEST_CASE("airy_eval consistency at zero and rho") {
  PrecisionScope scope(60);
  BigReal a = airy_eval(BigReal(0), 0, 50);
  BigReal ap = airy_eval(BigReal(0), 1, 50);
  CHECK(a == airy_taylor_coefficient(0, 50));
  // Wronskian-type product at 0 matches the product of the Taylor coefficients.
  CHECK(approx_equal(a * ap, airy_taylor_coefficient(0, 50) * airy_taylor_coefficient(1, 50), tol(50)));
  BigReal rho = -ap / a;
  CHECK(approx_equal_rel(rho, BigReal("0.729011133"), BigReal("6e-10")));
}

TEST_CASE("airy first negative root by bisection") {
  PrecisionScope scope(40);
  auto f = [](const BigReal& x) { return airy_eval(x, 0, 30); };
  BigReal root = bisect_root(f, BigReal(-3), BigReal(-2), 110);
  CHECK(approx_equal(root, BigReal("-2.338107410"), tol(9)));
  // Asymptotic zero formula a_k ~ -t^(2/3)(1 + 5/48 t^-2 - 5/36 t^-4), t = 3 pi (4k-1)/8.
  for (int k : {1, 5}) {
    double t = 3.0 * M_PI * (4 * k - 1) / 8.0;
    double asym = -std::pow(t, 2.0 / 3.0) * (1 + 5.0 / 48 / (t * t) - 5.0 / 36 / std::pow(t, 4));
    BigReal r = bisect_root(f, BigReal(asym - 0.05), BigReal(asym + 0.05), 100);
    CHECK(std::fabs(r.to_double() - asym) < (k == 1 ? 1e-3 : 1e-6));
  }
}

TEST_CASE("airy switchover between Taylor and asymptotic regimes") {
  PrecisionScope scope(60);
  // At the switchover point 50 digits cannot be certified asymptotically.
  AiryValue at6 = airy_eval_detailed(BigReal(6), 0, 50);
  CHECK(at6.method == AiryMethod::taylor);
  AiryValue low = airy_eval_detailed(BigReal(6), 0, 5);
  CHECK(low.method == AiryMethod::asymptotic);
  CHECK(approx_equal_rel(low.value, at6.value, BigReal("1e-5")));
  // Far out the asymptotic series certifies full precision and agrees with Taylor.
  AiryValue far = airy_eval_detailed(BigReal(25), 1, 50);
  CHECK(far.method == AiryMethod::asymptotic);
  AiryValue below = airy_eval_detailed(BigReal("5.99"), 1, 50);
  CHECK(below.method == AiryMethod::taylor);
  AiryValue a8 = airy_eval_detailed(BigReal(8), 0, 10);
  CHECK(a8.method == AiryMethod::asymptotic);
  PrecisionScope hp(80);
  BigReal taylor8 = airy_eval(BigReal(8), 0, 40);
  CHECK(approx_equal_rel(a8.value, taylor8, BigReal("1e-10")));
}

TEST_CASE("integer sequences") {
  using K = IntegerSequenceKind;
  CHECK(integer_sequence(K::genocchi, 2) == -1);
  CHECK(integer_sequence(K::genocchi, 4) == 1);
  CHECK(integer_sequence(K::genocchi, 6) == -3);
  CHECK(integer_sequence(K::genocchi, 8) == 17);
  CHECK(integer_sequence(K::bernoulli, 2) == Rational(1, 6));
  CHECK(integer_sequence(K::euler, 0) == 1);
  CHECK(integer_sequence(K::euler, 2) == -1);
  CHECK(integer_sequence(K::euler, 4) == 5);
  CHECK(integer_sequence(K::euler, 6) == -61);
  CHECK_THROWS_AS(integer_sequence(K::euler, 3), Error);
  for (int m = 1; m <= 20; ++m) {
    Rational two_pow = Rational(Integer(1) << (2 * m));
    CHECK(integer_sequence(K::genocchi, 2 * m) ==
          2 * (Rational(1) - two_pow) * integer_sequence(K::bernoulli, 2 * m));
    CHECK(denominator(integer_sequence(K::genocchi, 2 * m)) == 1);
    CHECK(denominator(integer_sequence(K::euler, 2 * m)) == 1);
  }
}

TEST_CASE("hypergeometric terminating and Gauss sums") {
  PrecisionScope scope(40);
  std::array<Rational, 4> up{Rational(0), Rational(1, 3), Rational(2, 5), Rational(1)};
  std::array<Rational, 3> lo{Rational(1, 3), Rational(2, 5), Rational(3, 2)};
  CHECK(hyper_4f3(std::span<const Rational, 4>(up), std::span<const Rational, 3>(lo), 30) == BigReal(1));

  // 4F3(a, b, x, y; c, x, y; 1) collapses to Gauss's 2F1(a, b; c; 1).
  Rational a(1, 3), b(1, 4), c(9, 5), x(3, 7), y(5, 11);
  std::array<Rational, 4> up2{a, b, x, y};
  std::array<Rational, 3> lo2{c, x, y};
  BigReal gauss = gamma(c, 30) * gamma(c - a - b, 30) / (gamma(c - a, 30) * gamma(c - b, 30));
  BigReal v = hyper_4f3(std::span<const Rational, 4>(up2), std::span<const Rational, 3>(lo2), 30);
  CHECK(approx_equal(v, gauss, tol(30)));

  // |z| < 1: 2F1(1, 1; 2; z) = -log(1 - z)/z.
  std::array<Rational, 2> up3{Rational(1), Rational(1)};
  std::array<Rational, 1> lo3{Rational(2)};
  BigReal z("0.5");
  HyperResult h = hyper_pfq(up3, lo3, z, 30);
  CHECK(approx_equal(h.value, -log(BigReal(1) - z) / z, tol(30)));
}

TEST_CASE("hypergeometric error paths") {
  std::array<Rational, 4> up{Rational(1), Rational(1), Rational(1), Rational(1)};
  std::array<Rational, 3> lo{Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(hyper_4f3(std::span<const Rational, 4>(up), std::span<const Rational, 3>(lo), 20), Error);
  std::array<Rational, 3> bad{Rational(-2), Rational(1), Rational(1)};
  CHECK_THROWS_AS(hyper_4f3(std::span<const Rational, 4>(up), std::span<const Rational, 3>(bad), 20), Error);
}

TEST_CASE("cubic values built from 4F3 series") {
  PrecisionScope scope(60);
  const int d = 40;
  auto R = [](long p, long q) { return Rational(p, q); };
  BigReal nu = BigReal(R(1, 5));
  // Twisted value at n = 1 for the cubic.
  BigReal zp1 = sqrt(pi()) / 2 * pow(BigReal(R(2, 5)), BigReal(R(6, 5))) * gamma(R(2, 5), d) *
                gamma(R(3, 5), d) / (gamma(R(4, 5), d) * gamma(R(9, 10), d));
  CHECK(approx_equal(zp1, BigReal("0.7836009674833"), tol(13)));

  std::array<Rational, 4> u38{R(4, 10), R(5, 10), R(6, 10), R(1, 1)};
  std::array<Rational, 3> l38{R(12, 10), R(13, 10), R(14, 10)};
  BigReal f38 = hyper_4f3(std::span<const Rational, 4>(u38), std::span<const Rational, 3>(l38), d);
  BigReal z2 = zp1 * zp1 + pow(BigReal(R(2, 5)), BigReal(R(2, 5))) *
                               sqrt((BigReal(5) - sqrt(BigReal(5))) / (8 * pi())) * gamma(R(3, 5), d) *
                               gamma(R(4, 5), d) / gamma(R(13, 10), d) * f38;
  CHECK(approx_equal(z2, BigReal("1.098003371"), tol(9)));

  std::array<Rational, 4> u39{R(6, 10), R(7, 10), R(8, 10), R(1, 1)};
  std::array<Rational, 3> l39{R(14, 10), R(15, 10), R(16, 10)};
  BigReal f39 = hyper_4f3(std::span<const Rational, 4>(u39), std::span<const Rational, 3>(l39), d);
  BigReal zm2 = pow(BigReal(R(2, 5)), BigReal(R(7, 5))) * gamma(R(7, 10), d) * gamma(R(4, 5), d) /
                (3 * sqrt(pi()) * gamma(R(7, 5), d)) * f39;
  CHECK(approx_equal(zm2, BigReal("0.104481190"), tol(9)));
  (void)nu;
}

TEST_CASE("Dirichlet lambda and beta") {
  PrecisionScope scope(60);
  CHECK(approx_equal(dirichlet_beta(BigReal(1), 40), pi() / 4, tol(40)));
  CHECK(approx_equal(dirichlet_beta(BigReal(2), 40),
                     BigReal("0.915965594177219015054603514932384110774"), tol(38)));
  CHECK(approx_equal(dirichlet_lambda(BigReal(2), 40), pi() * pi() / 8, tol(40)));
}

TEST_CASE("doubling precision keeps earlier digits") {
  BigReal g30, g60;
  {
    PrecisionScope s(40);
    g30 = gamma(Rational(1, 7), 30);
  }
  {
    PrecisionScope s(70);
    g60 = gamma(Rational(1, 7), 60);
    CHECK(approx_equal(g30, g60, tol(30)));
    BigReal f30, f60;
    std::array<Rational, 4> u{Rational(4, 10), Rational(5, 10), Rational(6, 10), Rational(1)};
    std::array<Rational, 3> l{Rational(12, 10), Rational(13, 10), Rational(14, 10)};
    f30 = hyper_4f3(std::span<const Rational, 4>(u), std::span<const Rational, 3>(l), 30);
    f60 = hyper_4f3(std::span<const Rational, 4>(u), std::span<const Rational, 3>(l), 60);
    CHECK(approx_equal(f30, f60, tol(30)));
  }
}
