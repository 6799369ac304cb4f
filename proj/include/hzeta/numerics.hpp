#ifndef HZETA_NUMERICS_HPP
#define HZETA_NUMERICS_HPP

#include "hzeta/bigcomplex.hpp"
#include "hzeta/bigreal.hpp"
#include "hzeta/error.hpp"

#include <span>
#include <vector>

namespace hz::num {

// ---------------------------------------------------------------------------
// Gamma

/// Gamma function correct to `digits` decimal digits. Throws gamma_pole at
/// nonpositive integers.
BigReal gamma(const BigReal& x, int digits = kDefaultDigits);
BigReal gamma(const Rational& x, int digits = kDefaultDigits);
/// Complex Gamma via shifted Stirling series and reflection.
BigComplex gamma(const BigComplex& z, int digits = kDefaultDigits);

// ---------------------------------------------------------------------------
// Airy

/// Ai^(n)(0) = 3^((n-2)/3) / pi * sin(2(n+1)pi/3) * Gamma((n+1)/3).
/// Exactly zero for n = 2 mod 3.
BigReal airy_taylor_coefficient(int n, int digits = kDefaultDigits);

/// |x| at which airy_eval first tries the asymptotic expansion.
inline constexpr double kAirySwitchover = 6.0;

enum class AiryMethod { taylor, asymptotic };

struct AiryValue {
  BigReal value;
  AiryMethod method;
};

/// Ai(x) (derivative = 0) or Ai'(x) (derivative = 1) for real x.
AiryValue airy_eval_detailed(const BigReal& x, int derivative, int digits = kDefaultDigits);
BigReal airy_eval(const BigReal& x, int derivative, int digits = kDefaultDigits);

// ---------------------------------------------------------------------------
// Integer sequences

enum class IntegerSequenceKind { bernoulli, euler, genocchi };

/// Exact B_{2m}, E_{2m} or G_{2m}; `index` is the even subscript 2m.
Rational integer_sequence(IntegerSequenceKind kind, int index);
/// B_n for any n >= 0 (B_1 = -1/2).
Rational bernoulli_number(int n);
/// Bernoulli polynomial B_n(x) at rational x.
Rational bernoulli_polynomial(int n, const Rational& x);

// ---------------------------------------------------------------------------
// Hypergeometric series

struct HyperResult {
  BigReal value;
  long terms_summed;
  BigReal tail_bound;
};

/// pFq(upper; lower; z) with rational parameters. Requires p = q + 1 at
/// z = 1 (algebraic tail handled by Euler-Maclaurin on the asymptotic
/// expansion of the terms) or |z| < 1 (geometric majorant on the ratio).
HyperResult hyper_pfq(std::span<const Rational> upper, std::span<const Rational> lower, const BigReal& z,
                      int digits = kDefaultDigits);

BigReal hyper_4f3(std::span<const Rational, 4> upper, std::span<const Rational, 3> lower,
                  int digits = kDefaultDigits);

// ---------------------------------------------------------------------------
// Dirichlet series used as independent cross-checks

/// beta(s) = sum (-1)^k (2k+1)^-s, via Cohen-Villegas-Zagier acceleration.
BigReal dirichlet_beta(const BigReal& s, int digits = kDefaultDigits);
/// lambda(s) = (1 - 2^-s) zeta(s).
BigReal dirichlet_lambda(const BigReal& s, int digits = kDefaultDigits);

}  // namespace hz::num

#endif  // HZETA_NUMERICS_HPP
