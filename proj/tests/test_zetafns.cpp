#include <doctest.h>

#include "hzeta/closedforms.hpp"
#include "hzeta/numerics.hpp"
#include "hzeta/zetafns.hpp"

#include <cmath>
#include <map>

using namespace hz;
using namespace hz::num;
using namespace hz::spec;
using namespace hz::zeta;

namespace {

const SpectrumRecord& cached(int N, Parity p, int count, int digits) {
  static std::map<std::tuple<int, int, int, int>, SpectrumRecord> cache;
  auto key = std::make_tuple(N, static_cast<int>(p), count, digits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, eigenvalues(N, p, count, digits)).first;
  return it->second;
}

SpectrumRecord merged(int N, int per_parity, int digits) {
  return merge(cached(N, Parity::plus, per_parity, digits), cached(N, Parity::minus, per_parity, digits));
}

SpectrumRecord first(const SpectrumRecord& r, std::size_t n) {
  SpectrumRecord out = r;
  out.eigenvalues.resize(n);
  out.certified_digits.resize(n);
  return out;
}

// Relative agreement to d significant digits, or to the last printed decimal of ref.
bool matches_printed(const BigReal& x, const char* ref, int d) {
  std::string s(ref);
  auto dot = s.find('.');
  int decimals = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
  BigReal r(s);
  BigReal tol = max(BigReal(5) * ten_to_minus(d) * abs(r), BigReal(5) * ten_to_minus(decimals + 1));
  return abs(x - r) <= tol;
}

}  // namespace

TEST_CASE("Bohr-Sommerfeld leading coefficient") {
  PrecisionScope scope(45);
  CHECK(approx_equal_rel(bohr_sommerfeld_b0(2, 35), num::pi(), ten_to_minus(33)));
  CHECK(approx_equal_rel(bohr_sommerfeld_b0(1, 35), BigReal(Rational(8, 3)), ten_to_minus(33)));
  BigReal g = gamma(Rational(1, 3), 40);
  BigReal closed_b0 = pow(BigReal(2), BigReal(Rational(2, 3))) * sqrt(BigReal(3)) * g * g * g / (BigReal(5) * num::pi());
  CHECK(approx_equal_rel(bohr_sommerfeld_b0(3, 35), closed_b0, ten_to_minus(30)));
  // Action integral of p^2 + q^4 by quadrature-free Beta identity: (4/4) B(1/4, 3/2).
  BigReal beta = gamma(Rational(1, 4), 40) * gamma(Rational(3, 2), 40) / gamma(Rational(7, 4), 40);
  CHECK(approx_equal_rel(bohr_sommerfeld_b0(4, 35), beta, ten_to_minus(30)));
  auto c3 = bohr_sommerfeld(3, 35);
  REQUIRE(c3.b1.has_value());
  CHECK(approx_equal_rel(*c3.b1, -pow(BigReal(2), BigReal(Rational(4, 3))) * num::pi() * num::pi() / (BigReal(9) * g * g * g),
                         ten_to_minus(30)));
  CHECK(approx_equal_rel(c3.mu, BigReal(Rational(5, 6)), ten_to_minus(40)));
  CHECK(bohr_sommerfeld(2, 20).b1->is_zero());
  CHECK(!bohr_sommerfeld(4, 20).b1.has_value());
  CHECK_THROWS_AS(bohr_sommerfeld_b0(0), Error);
}

TEST_CASE("cubic appendix values from ten eigenvalues") {
  auto all = merged(3, 5, 30);
  auto coeffs = bohr_sommerfeld(3, 30);
  EmOptions two_term{TailModel::two_term, 30};
  PrecisionScope scope(40);
  CHECK(matches_printed(zeta_em(ZetaKind::full, BigReal(3), all, coeffs, two_term).value, "0.9646441", 6));
  CHECK(matches_printed(zeta_em(ZetaKind::full, BigReal(4), all, coeffs, two_term).value, "0.9210896", 6));
  CHECK(matches_printed(zeta_em(ZetaKind::minus, BigReal(3), split(all, Parity::minus), coeffs, two_term).value,
                        "0.025878", 6));
}

TEST_CASE("harmonic sums match lambda and beta") {
  auto all = merged(2, 20, 40);
  auto coeffs = bohr_sommerfeld(2, 40);
  for (int s : {2, 3, 4, 5}) {
    CAPTURE(s);
    for (auto model : {TailModel::fitted, TailModel::two_term}) {
      auto full = zeta_em(ZetaKind::full, BigReal(s), all, coeffs, {model, 40});
      auto tw = zeta_em(ZetaKind::twisted, BigReal(s), all, coeffs, {model, 40});
      PrecisionScope scope(50);
      BigReal lam = dirichlet_lambda(BigReal(s), 40), bet = dirichlet_beta(BigReal(s), 40);
      CHECK(full.certified_digits >= (model == TailModel::fitted ? 30 : 6));
      CHECK_MESSAGE(abs(full.value - lam) <= BigReal(full.error_bound) + ten_to_minus(38), (full.value - lam).to_double() << " bound " << full.error_bound << " model " << static_cast<int>(model));
      CHECK_MESSAGE(abs(tw.value - bet) <= BigReal(tw.error_bound) + ten_to_minus(38), (tw.value - bet).to_double() << " bound " << tw.error_bound);
      CHECK(full.order == s);
    }
  }
  // Alternating kind at the pole of the full sum.
  auto p1 = zeta_em(ZetaKind::twisted, BigReal(1), all, coeffs, {TailModel::fitted, 40});
  PrecisionScope scope(50);
  CHECK(approx_equal_rel(p1.value, num::pi() / BigReal(4), ten_to_minus(25)));
}

TEST_CASE("fitted Airy sum: Z_1^+(3) = 1 from thirty eigenvalues") {
  const auto& plus = cached(1, Parity::plus, 30, 50);
  auto z = zeta_em(ZetaKind::plus, BigReal(3), plus, bohr_sommerfeld(1, 50), {TailModel::fitted, 50});
  PrecisionScope scope(60);
  CHECK(abs(z.value - BigReal(1)) < ten_to_minus(20));
  CHECK(z.certified_digits >= 20);
  const auto& minus = cached(1, Parity::minus, 30, 50);
  auto m2 = zeta_em(ZetaKind::minus, BigReal(2), minus, bohr_sommerfeld(1, 50), {TailModel::fitted, 50});
  BigReal rho = rules::closed_form_eval("RO", 0, 50);
  CHECK(approx_equal_rel(m2.value, rho * rho, ten_to_minus(20)));
}

TEST_CASE("parity algebra: full = plus + minus, twisted = plus - minus") {
  for (int N : {1, 3, 4, 6}) {
    CAPTURE(N);
    auto all = merged(N, 12, 30);
    auto coeffs = bohr_sommerfeld(N, 30);
    for (int s : {2, 3, 5}) {
      auto full = zeta_em(ZetaKind::full, BigReal(s), all, coeffs, {TailModel::fitted, 30});
      auto tw = zeta_em(ZetaKind::twisted, BigReal(s), all, coeffs, {TailModel::fitted, 30});
      auto p = zeta_em(ZetaKind::plus, BigReal(s), cached(N, Parity::plus, 12, 30), coeffs, {TailModel::fitted, 30});
      auto m = zeta_em(ZetaKind::minus, BigReal(s), cached(N, Parity::minus, 12, 30), coeffs, {TailModel::fitted, 30});
      PrecisionScope scope(40);
      BigReal tol(p.error_bound + m.error_bound + full.error_bound);
      CHECK(abs(full.value - (p.value + m.value)) <= tol + ten_to_minus(30));
      CHECK(abs(tw.value - (p.value - m.value)) <= tol + ten_to_minus(30));
      CHECK(full.value > tw.value);
      CHECK(tw.value.sign() > 0);
    }
  }
}

TEST_CASE("tail error scaling with the record length") {
  auto all = merged(3, 30, 30);
  auto coeffs = bohr_sommerfeld(3, 30);
  auto bare = coeffs;
  bare.b1.reset();
  BigReal ref = zeta_em(ZetaKind::full, BigReal(3), all, coeffs, {TailModel::fitted, 30}).value;
  auto deviation = [&](std::size_t n, const BohrSommerfeldCoeffs& c) {
    auto r = first(all, n);
    BigReal v = zeta_em(ZetaKind::full, BigReal(3), r, c, {TailModel::two_term, 30}).value;
    return std::make_pair(std::fabs((v - ref).to_double()), r.eigenvalues.back().to_double());
  };
  // With b1 the neglected order is E_K^-(s+3mu); without it, E_K^-(s+mu).
  auto [d1, e1] = deviation(10, coeffs);
  auto [d2, e2] = deviation(20, coeffs);
  double with_b1 = std::log(d1 / d2) / std::log(e2 / e1);
  CHECK(std::fabs(with_b1 / (3 + 3 * 5.0 / 6) - 1) < 0.2);
  auto [f1, g1] = deviation(40, bare);
  auto [f2, g2] = deviation(60, bare);
  double without_b1 = std::log(f1 / f2) / std::log(g2 / g1);
  CHECK(std::fabs(without_b1 / (3 + 5.0 / 6) - 1) < 0.2);
}

TEST_CASE("zeta_em argument checks") {
  auto all = merged(3, 5, 30);
  auto coeffs = bohr_sommerfeld(3, 30);
  try {
    zeta_em(ZetaKind::full, BigReal(Rational(5, 6)), all, coeffs);
    FAIL("expected a pole error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zeta_pole);
  }
  CHECK_THROWS_AS(zeta_em(ZetaKind::full, BigReal(Rational(1, 2)), all, coeffs), Error);
  CHECK_THROWS_AS(zeta_em(ZetaKind::full, BigReal(-1), all, coeffs), Error);
  CHECK_NOTHROW(zeta_em(ZetaKind::twisted, BigReal(Rational(1, 2)), all, coeffs, {TailModel::fitted, 30}));
  try {
    zeta_em(ZetaKind::plus, BigReal(3), first(cached(3, Parity::plus, 5, 30), 2), coeffs);
    FAIL("expected insufficient spectrum");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_spectrum);
  }
  CHECK_THROWS_AS(zeta_em(ZetaKind::full, BigReal(3), cached(3, Parity::plus, 5, 30), coeffs), Error);
  CHECK_THROWS_AS(zeta_em(ZetaKind::plus, BigReal(3), cached(3, Parity::minus, 5, 30), coeffs), Error);
  CHECK_THROWS_AS(zeta_em(ZetaKind::plus, BigReal(3), all, bohr_sommerfeld(4, 20)), Error);
}

TEST_CASE("determinant series") {
  const int p = 40;
  PrecisionScope scope(p + 10);
  // N = 2 full determinant against 2^{-l/2} sqrt(2 pi) / Gamma((1+l)/2).
  std::vector<ZetaValue> full;
  for (int n = 1; n <= 240; ++n) {
    ZetaValue z;
    z.N = 2;
    z.order = n;
    z.value = n == 1 ? rules::closed_form_eval("Z1.full", 2, p) : rules::closed_form_eval("Z2.dirichlet.full", n, p);
    full.push_back(z);
  }
  BigReal zp0 = rules::closed_form_eval("Z0.fullPrime", 2, p);
  CHECK(approx_equal_rel(determinant_series(BigReal(0), full, zp0, BigReal(1), p), sqrt(BigReal(2)), ten_to_minus(p - 2)));
  for (double l : {-0.6, -0.3, 0.1, 0.45, 0.6}) {
    CAPTURE(l);
    BigReal lam(l);
    BigReal exact = pow(BigReal(2), -lam / BigReal(2)) * sqrt(BigReal(2) * num::pi()) / gamma((BigReal(1) + lam) / BigReal(2), p);
    CHECK(approx_equal_rel(determinant_series(lam, full, zp0, BigReal(1), p), exact, ten_to_minus(p - 12)));
  }
  // The closed form itself gives sqrt(pi) at l = 1, on the boundary of the disk.
  CHECK(approx_equal_rel(sqrt(BigReal(2) * num::pi()) / (sqrt(BigReal(2)) * gamma(BigReal(1), p)), sqrt(num::pi()),
                         ten_to_minus(p)));
  try {
    determinant_series(BigReal(1), full, zp0, BigReal(1), p);
    FAIL("expected radius error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::radius_exceeded);
  }
  std::vector<ZetaValue> few(full.begin(), full.begin() + 5);
  try {
    determinant_series(BigReal(0.5), few, zp0, BigReal(1), p);
    FAIL("expected insufficient terms");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_terms);
  }
  // Airy: D^-(0) = 2 sqrt(pi) Ai(0).
  auto airy = closed_form_determinant_data(1, 10, p);
  CHECK(approx_equal_rel(determinant_series(BigReal(0), airy.minus, airy.minus_prime0, airy.minus_radius, p),
                         BigReal(2) * sqrt(num::pi()) * airy_taylor_coefficient(0, p), ten_to_minus(p - 2)));
  auto airy_long = closed_form_determinant_data(1, 80, p);
  BigReal l(Rational(3, 10));
  CHECK(approx_equal_rel(determinant_series(l, airy_long.minus, airy_long.minus_prime0, airy_long.minus_radius, p),
                         BigReal(2) * sqrt(num::pi()) * airy_eval(l, 0, p), ten_to_minus(p - 12)));
  CHECK(approx_equal_rel(determinant_series(l, airy_long.plus, airy_long.plus_prime0, airy_long.plus_radius, p),
                         BigReal(-2) * sqrt(num::pi()) * airy_eval(l, 1, p), ten_to_minus(p - 12)));
}

TEST_CASE("functional equation residuals") {
  const int p = 40;
  std::vector<BigComplex> samples = {BigComplex(BigReal(0.1)), BigComplex(BigReal(-0.2)), BigComplex(BigReal(0.25)),
                                     BigComplex(BigReal(0.05), BigReal(0.15)), BigComplex(BigReal(-0.1), BigReal(-0.2))};
  for (int N : {1, 2}) {
    CAPTURE(N);
    auto data = closed_form_determinant_data(N, 110, p);
    for (const auto& l : samples) CHECK(functional_eq_residual(data, l, p) < ten_to_minus(p - 12));
  }
  for (int N : {1, 2, 3, 6}) {
    CAPTURE(N);
    auto data = numeric_determinant_data(cached(N, Parity::plus, 12, 30), cached(N, Parity::minus, 12, 30), 24, 20);
    for (const auto& l : samples) CHECK(functional_eq_residual(data, l, 12) < ten_to_minus(8));
  }
  // Perturbing one input breaks the identity.
  auto bad = closed_form_determinant_data(1, 110, p);
  {
    PrecisionScope work(p + 10);
    bad.plus[0].value += ten_to_minus(4);
  }
  CHECK(functional_eq_residual(bad, samples[0], p) > ten_to_minus(7));
}

TEST_CASE("export formats") {
  auto all = merged(3, 5, 30);
  auto z = zeta_em(ZetaKind::full, BigReal(3), all, bohr_sommerfeld(3, 30), {TailModel::two_term, 30});
  auto back = zeta_value_from_json(to_json(z));
  CHECK(back.N == 3);
  CHECK(back.kind == ZetaKind::full);
  CHECK(back.order == 3);
  CHECK(back.method == ZetaMethod::direct_em);
  CHECK(back.certified_digits == z.certified_digits);
  PrecisionScope scope(40);
  CHECK(approx_equal_rel(back.value, z.value, ten_to_minus(z.certified_digits)));
  std::string csv = to_csv({z});
  CHECK(csv.rfind("N,kind,n,value,certified_digits,method\n3,full,3,", 0) == 0);
  CHECK(zeta_kind_from_string("twisted") == ZetaKind::twisted);
  CHECK(tail_model_from_string("two-term") == TailModel::two_term);
  CHECK_THROWS_AS(zeta_kind_from_string("odd"), Error);
}
