#include "hzeta/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hz::num {

namespace {

bool is_nonpositive_integer(const Rational& q) {
  return q <= 0 && denominator(q) == 1;
}

// Exact truncated exp of a power series with zero constant term.
std::vector<Rational> series_exp(const std::vector<Rational>& a) {
  std::vector<Rational> e(a.size());
  e[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * a[k] * e[n - k];
    e[n] = acc / static_cast<long>(n);
  }
  return e;
}

// Sum over n >= start of t(n), t(n) = C n^-sigma sum_k e_k n^-k, by
// Euler-Maclaurin applied to each power n^-(sigma+k).
struct AlgebraicTail {
  BigReal value;
  BigReal error;
};

AlgebraicTail algebraic_tail(const BigReal& prefactor, const Rational& sigma, const std::vector<Rational>& e,
                             long start, int bernoulli_terms) {
  BigReal m(start);
  BigReal total(0);
  BigReal last(0);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    Rational alpha = sigma + static_cast<long>(k);
    BigReal alpha_r(alpha);
    BigReal m_pow = pow(m, -alpha_r);  // M^-alpha
    BigReal piece = m_pow * m / (alpha_r - 1) + m_pow / 2;
    // + sum_j B_2j/(2j)! (alpha)_{2j-1} M^{-alpha-2j+1}
    BigReal rising = alpha_r;  // (alpha)_1
    BigReal mp = m_pow / m;    // M^{-alpha-1}
    BigReal fact(2);           // (2j)!
    for (int j = 1; j <= bernoulli_terms; ++j) {
      BigReal bern(bernoulli_number(2 * j));
      piece += bern / fact * rising * mp;
      rising = rising * (alpha_r + BigReal(2 * j - 1)) * (alpha_r + BigReal(2 * j));
      mp = mp / (m * m);
      fact = fact * BigReal((2 * j + 1) * (2 * j + 2));
    }
    BigReal contribution = prefactor * BigReal(e[k]) * piece;
    total += contribution;
    last = abs(contribution);
  }
  return {total, last};
}

}  // namespace

HyperResult hyper_pfq(std::span<const Rational> upper, std::span<const Rational> lower, const BigReal& z,
                      int digits) {
  for (const auto& b : lower) {
    if (is_nonpositive_integer(b)) {
      throw Error(ErrorCode::divergent_parameters, "hyper_pfq: lower parameter is a nonpositive integer");
    }
  }
  PrecisionScope scope(digits + kGuardDigits);
  BigReal eps = ten_to_minus(digits + 2);

  // Terminating series: the sum is a polynomial.
  long terminate = -1;
  for (const auto& a : upper) {
    if (is_nonpositive_integer(a)) {
      long n = -static_cast<long>(numerator(a));
      terminate = terminate < 0 ? n : std::min(terminate, n);
    }
  }

  auto ratio = [&](long n) {
    BigReal r = z / BigReal(n + 1);
    for (const auto& a : upper) r = r * (BigReal(a) + BigReal(n));
    for (const auto& b : lower) r = r / (BigReal(b) + BigReal(n));
    return r;
  };

  if (terminate >= 0) {
    BigReal term(1), sum(1);
    for (long n = 0; n < terminate; ++n) {
      term = term * ratio(n);
      sum += term;
    }
    return {sum, terminate + 1, BigReal(0)};
  }

  BigReal zabs = abs(z);
  if (zabs < BigReal(1)) {
    BigReal term(1), sum(1);
    double max_param = 0;
    for (const auto& a : upper) max_param = std::max(max_param, std::fabs(a.convert_to<double>()));
    for (const auto& b : lower) max_param = std::max(max_param, std::fabs(b.convert_to<double>()));
    for (long n = 0; n < 10000000; ++n) {
      BigReal r = ratio(n);
      term = term * r;
      sum += term;
      if (n > 2 * max_param + 2) {
        // Beyond this point the term ratio is monotone and tends to |z|.
        BigReal rb = max(abs(ratio(n + 1)), zabs);
        if (rb < BigReal(1)) {
          BigReal bound = abs(term) * rb / (BigReal(1) - rb);
          if (bound <= eps * abs(sum)) return {sum, n + 2, bound};
        }
      }
    }
    throw Error(ErrorCode::tail_bound_failure, "hyper_pfq: tail bound not reached");
  }

  if (!(z == BigReal(1))) {
    throw Error(ErrorCode::divergent_parameters, "hyper_pfq: |z| > 1 diverges");
  }
  if (upper.size() != lower.size() + 1) {
    throw Error(ErrorCode::divergent_parameters, "hyper_pfq: z = 1 requires p = q + 1");
  }
  // With n! counted as a lower parameter 1, t(n) ~ C n^-sigma.
  Rational sigma = 1;
  for (const auto& b : lower) sigma += b;
  for (const auto& a : upper) sigma -= a;
  if (sigma <= 1) {
    throw Error(ErrorCode::divergent_parameters,
                "hyper_pfq: series at z = 1 diverges (sum of lower minus upper parameters must be > 0)");
  }

  // log t(n) = log C - sigma log n + sum_k d_k n^-k with
  // d_k = (-1)^(k+1)/(k(k+1)) [sum B_{k+1}(a) - sum B_{k+1}(b)].
  long start = std::max<long>(40, 2L * digits);
  int asym_terms = digits + 20;
  std::vector<Rational> d(asym_terms + 1);
  for (int k = 1; k <= asym_terms; ++k) {
    Rational acc = 0;
    for (const auto& a : upper) acc += bernoulli_polynomial(k + 1, a);
    for (const auto& b : lower) acc -= bernoulli_polynomial(k + 1, b);
    acc -= bernoulli_polynomial(k + 1, Rational(1));
    Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    d[k] = sign * acc / (static_cast<long>(k) * (k + 1));
  }
  std::vector<Rational> e = series_exp(d);

  BigReal prefactor(1);
  for (const auto& b : lower) prefactor = prefactor * gamma(b, digits + kGuardDigits);
  for (const auto& a : upper) prefactor = prefactor / gamma(a, digits + kGuardDigits);

  BigReal term(1), sum(1);
  for (long n = 0; n + 1 < start; ++n) {
    term = term * ratio(n);
    sum += term;
  }
  AlgebraicTail tail = algebraic_tail(prefactor, sigma, e, start, digits / 2 + 10);
  BigReal total = sum + tail.value;
  if (tail.error > eps * abs(total)) {
    throw Error(ErrorCode::tail_bound_failure,
                "hyper_pfq: asymptotic tail error " + tail.error.to_string(5) + " exceeds tolerance");
  }
  return {total, start, tail.error};
}

BigReal hyper_4f3(std::span<const Rational, 4> upper, std::span<const Rational, 3> lower, int digits) {
  return hyper_pfq(std::span<const Rational>(upper), std::span<const Rational>(lower), BigReal(1), digits).value;
}

BigReal dirichlet_beta(const BigReal& s, int digits) {
  PrecisionScope scope(digits + kGuardDigits);
  // Cohen-Villegas-Zagier, algorithm 1: error about 5.83^-n.
  long n = static_cast<long>(std::ceil((digits + kGuardDigits) * 1.31)) + 4;
  BigReal d = pow(BigReal(3) + sqrt(BigReal(8)), n);
  d = (d + BigReal(1) / d) / 2;
  BigReal b(-1);
  BigReal c = -d;
  BigReal sum(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    sum += c * pow(BigReal(2 * k + 1), -s);
    b = b * BigReal((k + n) * (k - n)) / (BigReal(k) + BigReal(1) / 2) / BigReal(k + 1);
  }
  return sum / d;
}

BigReal dirichlet_lambda(const BigReal& s, int digits) {
  PrecisionScope scope(digits + kGuardDigits);
  return (BigReal(1) - pow(BigReal(2), -s)) * riemann_zeta(s);
}

}  // namespace hz::num
