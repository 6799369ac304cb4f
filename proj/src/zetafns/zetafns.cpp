#include "hzeta/zetafns.hpp"

#include "hzeta/closedforms.hpp"
#include "hzeta/error.hpp"
#include "hzeta/numerics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hz::zeta {

using num::PrecisionScope;

namespace {

template <class E>
struct Names {
  E value;
  const char* name;
};

constexpr Names<ZetaKind> kKinds[] = {
    {ZetaKind::full, "full"}, {ZetaKind::twisted, "twisted"}, {ZetaKind::plus, "plus"}, {ZetaKind::minus, "minus"}};
constexpr Names<ZetaMethod> kMethods[] = {{ZetaMethod::direct_em, "direct-EM"},
                                          {ZetaMethod::closed_form, "closed-form"},
                                          {ZetaMethod::identity_derived, "identity-derived"}};
constexpr Names<TailModel> kModels[] = {{TailModel::two_term, "two-term"}, {TailModel::fitted, "fitted"}};

template <class E, std::size_t K>
std::string name_of(const Names<E> (&table)[K], E v) {
  for (const auto& n : table)
    if (n.value == v) return n.name;
  return "?";
}

template <class E, std::size_t K>
E parse(const Names<E> (&table)[K], const std::string& s, const char* what) {
  for (const auto& n : table)
    if (s == n.name) return n.value;
  throw Error(ErrorCode::invalid_argument, std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

std::string to_string(ZetaKind k) { return name_of(kKinds, k); }
ZetaKind zeta_kind_from_string(const std::string& s) { return parse(kKinds, s, "zeta kind"); }
std::string to_string(ZetaMethod m) { return name_of(kMethods, m); }
ZetaMethod zeta_method_from_string(const std::string& s) { return parse(kMethods, s, "zeta method"); }
std::string to_string(TailModel m) { return name_of(kModels, m); }
TailModel tail_model_from_string(const std::string& s) { return parse(kModels, s, "tail model"); }

BigReal bohr_sommerfeld_b0(int N, int digits) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "bohr_sommerfeld_b0: N must be at least 1");
  PrecisionScope scope(digits + num::kGuardDigits);
  Rational inv(1, N);
  return BigReal(4) / BigReal(N) * num::gamma(inv, digits) * num::gamma(Rational(3, 2), digits) /
         num::gamma(inv + Rational(3, 2), digits);
}

BohrSommerfeldCoeffs bohr_sommerfeld(int N, int digits) {
  BohrSommerfeldCoeffs c;
  c.N = N;
  c.b0 = bohr_sommerfeld_b0(N, digits);
  PrecisionScope scope(digits + num::kGuardDigits);
  c.mu = BigReal(Rational(N + 2, 2 * N));
  if (N == 2) c.b1 = BigReal(0);
  if (N == 3) {
    BigReal g = num::gamma(Rational(1, 3), digits);
    c.b1 = -num::pow(BigReal(2), BigReal(Rational(4, 3))) * num::pi() * num::pi() / (BigReal(9) * g * g * g);
  }
  return c;
}

namespace {

using Series = std::vector<BigReal>;

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series c(order + 1, BigReal(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series series_inverse(const Series& a, std::size_t order) {
  Series b(order + 1, BigReal(0));
  b[0] = BigReal(1) / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    BigReal acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * b[n - k];
    b[n] = -acc * b[0];
  }
  return b;
}

// Counting law j = a x + c + sum_p beta_p x^-p with x = E^mu.
struct CountingModel {
  BigReal a;
  BigReal c;
  std::vector<std::pair<int, BigReal>> beta;

  BigReal value(const BigReal& x) const {
    BigReal v = a * x + c;
    for (const auto& [p, b] : beta) v += b * num::pow(x, -static_cast<long>(p));
    return v;
  }
  BigReal slope(const BigReal& x) const {
    BigReal v = a;
    for (const auto& [p, b] : beta) v -= BigReal(p) * b * num::pow(x, -static_cast<long>(p) - 1);
    return v;
  }
};

// Position x where the model reaches index j, by Newton from `guess`.
BigReal model_position(const CountingModel& m, long j, BigReal x, int digits) {
  BigReal target(j);
  for (int it = 0; it < 200; ++it) {
    BigReal dx = (m.value(x) - target) / m.slope(x);
    x -= dx;
    if (num::abs(dx) <= num::ten_to_minus(digits + 5) * num::abs(x)) break;
  }
  return x;
}

// Tail sum over j >= n of x(j)^-sigma for the model; sigma = 1 keeps the finite part.
// The coarse variant (order 16, Euler-Maclaurin from n) is for comparing models with
// each other; the precise one sums explicitly up to an index where an order-40
// expansion reaches the target.
BigReal model_tail(const CountingModel& m, long n, const BigReal& sigma, int digits, bool precise) {
  const std::size_t order = precise ? 40 : 16;
  long start = n;
  if (precise) {
    double need = (std::lgamma(order + 1.0) / std::log(10.0) + digits + 5) / static_cast<double>(order);
    start = std::max(n, static_cast<long>(std::ceil(std::pow(10.0, need) / (2 * M_PI))));
  }
  BigReal x = model_position(m, n, (BigReal(n) - m.c) / m.a, digits);
  BigReal explicit_part(0);
  for (long j = n; j < start; ++j) {
    explicit_part += num::pow(x, -sigma);
    x = model_position(m, j + 1, x + BigReal(1) / m.a, digits);
  }
  BigReal one(1);
  BigReal integral;
  BigReal sm1 = sigma - one;
  if (num::abs(sm1) < num::ten_to_minus(digits + 5)) {
    integral = -m.a * num::log(x);
  } else {
    integral = m.a * num::pow(x, -sm1) / sm1;
  }
  for (const auto& [p, b] : m.beta) {
    integral -= BigReal(p) * b * num::pow(x, -(sigma + BigReal(p))) / (sigma + BigReal(p));
  }
  BigReal g0 = num::pow(x, -sigma);
  BigReal total = explicit_part + integral + g0 / BigReal(2);

  // Taylor data of j(x + t) - n = sum d_i t^i, reversed to t(u) by Lagrange inversion.
  Series d(order + 2, BigReal(0));
  d[1] = m.a;
  for (const auto& [p, b] : m.beta) {
    // b (x + t)^-p = b x^-p sum_i binom(-p, i) (t/x)^i
    BigReal coef = b * num::pow(x, -static_cast<long>(p));
    for (std::size_t i = 1; i <= order + 1; ++i) {
      coef = coef * BigReal(-p - static_cast<long>(i) + 1) / (BigReal(static_cast<long>(i)) * x);
      d[i] += coef;
    }
  }
  Series shifted(d.begin() + 1, d.end());  // phi(t)/t
  Series psi = series_inverse(shifted, order);
  Series t(order + 1, BigReal(0));
  Series power = psi;
  for (std::size_t k = 1; k <= order; ++k) {
    t[k] = power[k - 1] / BigReal(static_cast<long>(k));
    power = series_mul(power, psi, order);
  }
  // g = x^-sigma (1 + tau)^-sigma with tau = t/x: n f_n = sum_k (alpha k - (n-k)) tau_k f_{n-k}.
  Series tau(order + 1, BigReal(0));
  for (std::size_t k = 1; k <= order; ++k) tau[k] = t[k] / x;
  Series f(order + 1, BigReal(0));
  f[0] = BigReal(1);
  BigReal alpha = -sigma;
  for (std::size_t nn = 1; nn <= order; ++nn) {
    BigReal acc(0);
    for (std::size_t k = 1; k <= nn; ++k) {
      acc += (alpha * BigReal(static_cast<long>(k)) - BigReal(static_cast<long>(nn - k))) * tau[k] * f[nn - k];
    }
    f[nn] = acc / BigReal(static_cast<long>(nn));
  }
  // Euler-Maclaurin: - sum_m B_2m/(2m) * g_{2m-1}, stopped at the smallest term.
  BigReal last;
  BigReal tiny = num::ten_to_minus(digits + 5) * num::abs(total);
  for (std::size_t mm = 1; 2 * mm - 1 <= order; ++mm) {
    BigReal term = BigReal(num::bernoulli_number(static_cast<int>(2 * mm))) / BigReal(static_cast<long>(2 * mm)) *
                   g0 * f[2 * mm - 1];
    if (mm > 1 && num::abs(term) > num::abs(last)) break;
    total -= term;
    if (num::abs(term) < tiny) break;
    last = term;
  }
  return total;
}

// Solves the square system A y = r by Gaussian elimination with partial pivoting.
std::vector<BigReal> solve(std::vector<std::vector<BigReal>> A, std::vector<BigReal> r) {
  std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (num::abs(A[i][col]) > num::abs(A[piv][col])) piv = i;
    std::swap(A[col], A[piv]);
    std::swap(r[col], r[piv]);
    if (A[col][col].is_zero()) throw Error(ErrorCode::internal_inconsistency, "zeta_em: singular fit");
    for (std::size_t i = col + 1; i < n; ++i) {
      BigReal factor = A[i][col] / A[col][col];
      for (std::size_t k = col; k < n; ++k) A[i][k] -= factor * A[col][k];
      r[i] -= factor * r[col];
    }
  }
  std::vector<BigReal> y(n);
  for (std::size_t i = n; i-- > 0;) {
    BigReal acc = r[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= A[i][k] * y[k];
    y[i] = acc / A[i][i];
  }
  return y;
}

struct TailEstimate {
  BigReal value;  // partial sum + tail
  BigReal error;
};

BigReal partial_sum(const std::vector<BigReal>& E, std::size_t upto, const BigReal& s) {
  BigReal acc(0);
  for (std::size_t j = 0; j < upto; ++j) acc += num::pow(E[j], -s);
  return acc;
}

// Fitted counting law on one parity; a is the known leading coefficient.
TailEstimate fitted_sum(const std::vector<BigReal>& E, const BigReal& a, const BigReal& mu, const BigReal& s,
                        int digits) {
  std::size_t n = E.size();
  if (n < 3) throw Error(ErrorCode::insufficient_spectrum, "zeta_em: the fitted tail needs at least 3 eigenvalues per parity");
  BigReal sigma = s / mu;
  BigReal head = partial_sum(E, n, s);
  std::vector<BigReal> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = num::pow(E[j], mu);
  int jmax = static_cast<int>(std::min<std::size_t>(n - 1, 14));
  TailEstimate best{BigReal(0), BigReal(-1)};
  CountingModel best_model;
  for (int step : {1, 2}) {
    std::vector<BigReal> tails;
    std::vector<CountingModel> models;
    for (int J = 0; J <= jmax; ++J) {
      std::size_t m = static_cast<std::size_t>(J) + 1;
      std::vector<std::vector<BigReal>> A(m, std::vector<BigReal>(m));
      std::vector<BigReal> r(m);
      for (std::size_t row = 0; row < m; ++row) {
        std::size_t j = n - m + row;
        A[row][0] = BigReal(1);
        for (int i = 1; i <= J; ++i) A[row][static_cast<std::size_t>(i)] = num::pow(x[j], -static_cast<long>(step * (i - 1) + 1));
        r[row] = BigReal(static_cast<long>(j)) - a * x[j];
      }
      std::vector<BigReal> y = solve(A, r);
      CountingModel model{a, y[0], {}};
      for (int i = 1; i <= J; ++i) model.beta.emplace_back(step * (i - 1) + 1, y[static_cast<std::size_t>(i)]);
      tails.push_back(model_tail(model, static_cast<long>(n), sigma, digits, false));
      models.push_back(std::move(model));
    }
    for (std::size_t J = 1; J < tails.size(); ++J) {
      BigReal err = num::abs(tails[J] - tails[J - 1]);
      if (J + 1 < tails.size()) err = num::max(err, num::abs(tails[J + 1] - tails[J]));
      if (best.error.sign() < 0 || err < best.error) {
        best = {tails[J], err};
        best_model = models[J];
      }
    }
  }
  if (best.error.sign() < 0) {
    throw Error(ErrorCode::insufficient_spectrum, "zeta_em: too few eigenvalues for a fitted tail");
  }
  best.value = head + model_tail(best_model, static_cast<long>(n), sigma, digits, true);
  return best;
}

// The two-coefficient Euler-Maclaurin form with coefficients b0, b1 of the counting law.
TailEstimate two_term_sum(const std::vector<BigReal>& E, const BigReal& b0, const std::optional<BigReal>& b1,
                       const BigReal& mu, const BigReal& s, int digits) {
  if (E.size() < 2) throw Error(ErrorCode::insufficient_spectrum, "zeta_em: need at least 2 eigenvalues");
  std::size_t K = E.size() - 1;
  const BigReal& EK = E[K];
  BigReal two_pi = BigReal(2) * num::pi();
  BigReal value = partial_sum(E, K, s) + num::pow(EK, -s) / BigReal(2);
  BigReal c = mu * b0 / two_pi;
  BigReal smu = s - mu;
  if (num::abs(smu) < num::ten_to_minus(digits + 5)) {
    value -= c * num::log(EK);
  } else {
    value += c * num::pow(EK, -smu) / smu;
  }
  BigReal bernoulli_part = BigReal(Rational(1, 12)) * two_pi / (mu * b0) * s;
  BigReal bracket = bernoulli_part;
  if (b1) bracket -= mu * *b1 / (two_pi * (s + mu));
  BigReal low = num::pow(EK, -(s + mu));
  value += bracket * low;
  // Next order of the expansion, scaled by 10 since its coefficient is not known.
  BigReal error = BigReal(10) * num::abs(bracket) * low * num::pow(EK, -(mu + mu));
  // Without b1 its term is unknown; take the Bernoulli term as its scale.
  if (!b1) error += num::abs(bernoulli_part) * low;
  return {value, error};
}

std::vector<BigReal> parity_values(const SpectrumRecord& r, Parity p) {
  if (r.parity == p) return r.eigenvalues;
  return spec::split(r, p).eigenvalues;
}

int digits_from_error(const BigReal& value, const BigReal& error, int cap) {
  if (error.is_zero()) return cap;
  BigReal rel = error / num::max(num::abs(value), num::ten_to_minus(cap + 5));
  double lg = -std::log10(std::max(rel.to_double(), 1e-300));
  int d = static_cast<int>(std::floor(lg));
  return std::clamp(d, 0, cap);
}

}  // namespace

ZetaValue zeta_em(ZetaKind kind, const BigReal& s, const SpectrumRecord& record, const BohrSommerfeldCoeffs& coeffs,
                  const EmOptions& options) {
  if (record.N != coeffs.N) throw Error(ErrorCode::invalid_argument, "zeta_em: record and coefficients disagree on N");
  bool single = kind == ZetaKind::plus || kind == ZetaKind::minus;
  Parity want = kind == ZetaKind::plus ? Parity::plus : kind == ZetaKind::minus ? Parity::minus : Parity::both;
  if (single && record.parity != want && record.parity != Parity::both) {
    throw Error(ErrorCode::invalid_argument, "zeta_em: record parity does not match the requested kind");
  }
  if (!single && record.parity != Parity::both) {
    throw Error(ErrorCode::invalid_argument, "zeta_em: full and twisted sums need a merged record");
  }
  int digits = options.digits;
  PrecisionScope scope(digits + num::kGuardDigits + 15);
  if (s.sign() <= 0) throw Error(ErrorCode::invalid_argument, "zeta_em: s must be positive");
  if (kind != ZetaKind::twisted) {
    // The pole is compared at the precision the caller supplied s with.
    BigReal pole(Rational(coeffs.N + 2, 2 * coeffs.N));
    BigReal tol = num::pow(BigReal(2), BigReal(8 - std::min<long>(s.precision_bits(), num::digits_to_bits(digits))));
    if (num::abs(s - pole) < tol) {
      throw Error(ErrorCode::zeta_pole, "zeta_em: s = mu is the pole of the sum");
    }
    if (s < coeffs.mu) throw Error(ErrorCode::invalid_argument, "zeta_em: the sum diverges for s < mu");
  }
  int record_digits = digits;
  for (int d : record.certified_digits) record_digits = std::min(record_digits, d);

  BigReal value, error;
  BigReal half_b0 = coeffs.b0 / BigReal(2);
  std::optional<BigReal> half_b1;
  if (coeffs.b1) half_b1 = *coeffs.b1 / BigReal(2);
  auto one_parity = [&](Parity p) {
    auto E = parity_values(record, p);
    if (options.model == TailModel::two_term) return two_term_sum(E, half_b0, half_b1, coeffs.mu, s, digits);
    return fitted_sum(E, coeffs.b0 / (BigReal(4) * num::pi()), coeffs.mu, s, digits);
  };
  if (kind == ZetaKind::full && options.model == TailModel::two_term) {
    auto t = two_term_sum(record.eigenvalues, coeffs.b0, coeffs.b1, coeffs.mu, s, digits);
    value = t.value;
    error = t.error;
  } else if (single) {
    auto t = one_parity(want);
    value = t.value;
    error = t.error;
  } else {
    auto tp = one_parity(Parity::plus);
    auto tm = one_parity(Parity::minus);
    value = kind == ZetaKind::full ? tp.value + tm.value : tp.value - tm.value;
    error = tp.error + tm.error;
  }
  // Eigenvalue errors propagate with weight s relative to each term.
  error += num::abs(s) * num::abs(value) * num::ten_to_minus(record_digits);

  ZetaValue out;
  out.N = record.N;
  out.kind = kind;
  BigReal rounded(std::lround(s.to_double()));
  out.order = num::abs(s - rounded) < num::ten_to_minus(digits) ? static_cast<int>(rounded.to_long()) : 0;
  out.value = value;
  out.method = ZetaMethod::direct_em;
  out.certified_digits = digits_from_error(value, error, record_digits);
  out.error_bound = error.to_double();
  return out;
}

BigComplex determinant_series(const BigComplex& lambda, const std::vector<ZetaValue>& zeta_values,
                              const BigReal& zprime0, const BigReal& radius, int digits) {
  PrecisionScope scope(digits + num::kGuardDigits);
  BigReal r = num::abs(lambda);
  if (!(r < radius)) throw Error(ErrorCode::radius_exceeded, "determinant_series: |lambda| reaches the lowest eigenvalue");
  BigComplex series(-zprime0);
  BigComplex power(1);
  BigComplex minus_lambda = -lambda;
  for (std::size_t i = 0; i < zeta_values.size(); ++i) {
    if (zeta_values[i].order != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::invalid_argument, "determinant_series: zeta values must be orders 1, 2, ... in sequence");
    }
    power = power * minus_lambda;
    series -= power * zeta_values[i].value / BigReal(static_cast<long>(i) + 1);
  }
  if (!r.is_zero()) {
    if (zeta_values.empty()) throw Error(ErrorCode::insufficient_terms, "determinant_series: no zeta values supplied");
    // Geometric tail: Z(n) ~ Z(M) radius^-(n-M).
    long M = static_cast<long>(zeta_values.size());
    BigReal q = r / radius;
    BigReal tail = num::abs(zeta_values.back().value) * num::pow(r, M) * q / (BigReal(M + 1) * (BigReal(1) - q));
    if (tail > num::ten_to_minus(digits)) {
      throw Error(ErrorCode::insufficient_terms, "determinant_series: tail bound " + tail.to_string(3) +
                                                     " exceeds the target; supply more zeta values");
    }
  }
  return num::exp(series);
}

BigReal determinant_series(const BigReal& lambda, const std::vector<ZetaValue>& zeta_values, const BigReal& zprime0,
                           const BigReal& radius, int digits) {
  return determinant_series(BigComplex(lambda), zeta_values, zprime0, radius, digits).re;
}

namespace {

ZetaValue make_value(int N, ZetaKind kind, int order, BigReal v, ZetaMethod method, int digits) {
  ZetaValue z;
  z.N = N;
  z.kind = kind;
  z.order = order;
  z.value = std::move(v);
  z.method = method;
  z.certified_digits = digits;
  return z;
}

void prime0_from_closed_forms(DeterminantData& d, int digits) {
  BigReal full = rules::closed_form_eval("Z0.fullPrime", d.N, digits);
  BigReal tw = rules::closed_form_eval("Z0.twistedPrime", d.N, digits);
  PrecisionScope scope(digits + num::kGuardDigits);
  d.plus_prime0 = (full + tw) / BigReal(2);
  d.minus_prime0 = (full - tw) / BigReal(2);
}

// Z^+(1), Z^-(1) for the two cases where the sum itself diverges.
std::pair<BigReal, BigReal> regularized_first(int N, int digits) {
  if (N == 1) {
    return {rules::closed_form_eval("Airy.plus1", 0, digits), rules::closed_form_eval("Airy.minus1", 0, digits)};
  }
  BigReal full = rules::closed_form_eval("Z1.full", 2, digits);
  BigReal tw = rules::closed_form_eval("Z1.twisted", 2, digits);
  PrecisionScope scope(digits + num::kGuardDigits);
  return {(full + tw) / BigReal(2), (full - tw) / BigReal(2)};
}

}  // namespace

DeterminantData closed_form_determinant_data(int N, int n_max, int digits) {
  if (N != 1 && N != 2) throw Error(ErrorCode::invalid_argument, "closed_form_determinant_data: only N = 1 and 2 have closed forms at every order");
  if (n_max < 1) throw Error(ErrorCode::invalid_argument, "closed_form_determinant_data: n_max must be positive");
  DeterminantData d;
  d.N = N;
  prime0_from_closed_forms(d, digits);
  for (int n = 1; n <= n_max; ++n) {
    BigReal p, m;
    if (N == 1) {
      p = rules::airy_zeta_value(true, n, digits);
      m = rules::airy_zeta_value(false, n, digits);
    } else if (n == 1) {
      std::tie(p, m) = regularized_first(2, digits);
    } else {
      BigReal full = rules::closed_form_eval("Z2.dirichlet.full", n, digits);
      BigReal tw = rules::closed_form_eval("Z2.dirichlet.twisted", n, digits);
      PrecisionScope scope(digits + num::kGuardDigits);
      p = (full + tw) / BigReal(2);
      m = (full - tw) / BigReal(2);
    }
    d.plus.push_back(make_value(N, ZetaKind::plus, n, p, ZetaMethod::closed_form, digits));
    d.minus.push_back(make_value(N, ZetaKind::minus, n, m, ZetaMethod::closed_form, digits));
  }
  PrecisionScope scope(digits + num::kGuardDigits);
  if (N == 2) {
    d.plus_radius = BigReal(1);
    d.minus_radius = BigReal(3);
  } else {
    d.plus_radius = spec::eigenvalues(1, Parity::plus, 1, 20).eigenvalues[0];
    d.minus_radius = spec::eigenvalues(1, Parity::minus, 1, 20).eigenvalues[0];
  }
  return d;
}

DeterminantData numeric_determinant_data(const SpectrumRecord& plus, const SpectrumRecord& minus, int n_max,
                                         int digits) {
  if (plus.parity != Parity::plus || minus.parity != Parity::minus || plus.N != minus.N || plus.size() == 0 ||
      minus.size() == 0) {
    throw Error(ErrorCode::invalid_argument, "numeric_determinant_data: need a plus and a minus record of the same N");
  }
  int N = plus.N;
  DeterminantData d;
  d.N = N;
  prime0_from_closed_forms(d, digits);
  BohrSommerfeldCoeffs coeffs = bohr_sommerfeld(N, digits);
  EmOptions opt;
  opt.digits = digits;
  for (int n = 1; n <= n_max; ++n) {
    if (n == 1 && (N == 1 || N == 2)) {
      auto [p, m] = regularized_first(N, digits);
      d.plus.push_back(make_value(N, ZetaKind::plus, 1, p, ZetaMethod::closed_form, digits));
      d.minus.push_back(make_value(N, ZetaKind::minus, 1, m, ZetaMethod::closed_form, digits));
      continue;
    }
    d.plus.push_back(zeta_em(ZetaKind::plus, BigReal(n), plus, coeffs, opt));
    d.minus.push_back(zeta_em(ZetaKind::minus, BigReal(n), minus, coeffs, opt));
  }
  d.plus_radius = plus.eigenvalues[0];
  d.minus_radius = minus.eigenvalues[0];
  return d;
}

BigReal functional_eq_residual(const DeterminantData& data, const BigComplex& lambda, int digits) {
  PrecisionScope scope(digits + num::kGuardDigits);
  long m = data.N + 2;
  BigComplex eps = BigComplex::unit_root(1, m);
  BigComplex omega = BigComplex::unit_root(4, m);
  BigComplex rotated = omega * lambda;
  auto Dp = [&](const BigComplex& l) {
    return determinant_series(l, data.plus, data.plus_prime0, data.plus_radius, digits);
  };
  auto Dm = [&](const BigComplex& l) {
    return determinant_series(l, data.minus, data.minus_prime0, data.minus_radius, digits);
  };
  BigComplex lhs = eps * Dp(lambda) * Dm(rotated) - conj(eps) * Dp(rotated) * Dm(lambda);
  BigComplex rhs(BigReal(0), BigReal(2));
  if (data.N == 2) {
    BigComplex phase = num::exp(BigComplex(BigReal(0), -num::pi() / BigReal(4)) * lambda);
    rhs = rhs * phase;
  }
  return num::abs(lhs - rhs);
}

std::string to_json(const ZetaValue& v, int indent) {
  nlohmann::json j;
  j["N"] = v.N;
  j["kind"] = to_string(v.kind);
  j["n"] = v.order;
  j["value"] = v.value.to_string(std::max(v.certified_digits, 1) + 2);
  j["certified_digits"] = v.certified_digits;
  j["method"] = to_string(v.method);
  j["error_bound"] = v.error_bound;
  return j.dump(indent);
}

ZetaValue zeta_value_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    ZetaValue v;
    v.N = j.at("N").get<int>();
    v.kind = zeta_kind_from_string(j.at("kind").get<std::string>());
    v.order = j.at("n").get<int>();
    v.certified_digits = j.at("certified_digits").get<int>();
    PrecisionScope scope(v.certified_digits + num::kGuardDigits);
    v.value = BigReal(j.at("value").get<std::string>());
    v.method = zeta_method_from_string(j.at("method").get<std::string>());
    v.error_bound = j.value("error_bound", 0.0);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("zeta value json: ") + e.what());
  }
}

std::string to_csv(const std::vector<ZetaValue>& values) {
  std::ostringstream out;
  out << "N,kind,n,value,certified_digits,method\n";
  for (const auto& v : values) {
    out << v.N << ',' << to_string(v.kind) << ',' << v.order << ',' << v.value.to_string(std::max(v.certified_digits, 1) + 2)
        << ',' << v.certified_digits << ',' << to_string(v.method) << '\n';
  }
  return out.str();
}

}  // namespace hz::zeta
