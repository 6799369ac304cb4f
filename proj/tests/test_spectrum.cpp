#include <doctest.h>

#include "hzeta/closedforms.hpp"
#include "hzeta/numerics.hpp"
#include "hzeta/spectrum.hpp"
#include "hzeta/zetafns.hpp"

#include <cmath>
#include <map>

using namespace hz;
using namespace hz::num;
using namespace hz::spec;

namespace {

// Spectra are expensive; each (N, parity, count, digits) is solved once per run.
const SpectrumRecord& cached(int N, Parity p, int count, int digits) {
  static std::map<std::tuple<int, int, int, int>, SpectrumRecord> cache;
  auto key = std::make_tuple(N, static_cast<int>(p), count, digits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, eigenvalues(N, p, count, digits)).first;
  return it->second;
}

}  // namespace

TEST_CASE("harmonic oscillator: merged spectrum is 2k+1") {
  auto all = merge(cached(2, Parity::plus, 6, 30), cached(2, Parity::minus, 6, 30));
  REQUIRE(all.size() == 12);
  PrecisionScope scope(40);
  for (std::size_t k = 0; k < all.size(); ++k) {
    CAPTURE(k);
    CHECK(approx_equal_rel(all.eigenvalues[k], BigReal(2 * static_cast<long>(k) + 1), ten_to_minus(29)));
    CHECK(all.certified_digits[k] == 30);
  }
}

TEST_CASE("linear potential: eigenvalues are negated Airy zeros") {
  const auto& minus = cached(1, Parity::minus, 8, 30);
  const auto& plus = cached(1, Parity::plus, 8, 30);
  PrecisionScope scope(45);
  CHECK(approx_equal_rel(minus.eigenvalues[0], BigReal("2.338107410459767038489197252446735440638"), ten_to_minus(29)));
  CHECK(approx_equal_rel(minus.eigenvalues[1], BigReal("4.087949444130970616636988701457391060224"), ten_to_minus(29)));
  for (std::size_t k = 0; k < 8; ++k) {
    CAPTURE(k);
    BigReal ai = airy_eval(-minus.eigenvalues[k], 0, 35);
    BigReal aip = airy_eval(-minus.eigenvalues[k], 1, 35);
    CHECK(abs(ai) < ten_to_minus(27) * abs(aip));
    BigReal bp = airy_eval(-plus.eigenvalues[k], 1, 35);
    BigReal b = airy_eval(-plus.eigenvalues[k], 0, 35);
    CHECK(abs(bp) < ten_to_minus(27) * abs(b) * plus.eigenvalues[k]);
  }
}

TEST_CASE("cubic spectrum reproduces the twisted closed form at s = 1") {
  auto all = merge(cached(3, Parity::plus, 10, 30), cached(3, Parity::minus, 10, 30));
  auto coeffs = zeta::bohr_sommerfeld(3, 30);
  auto z = zeta::zeta_em(zeta::ZetaKind::twisted, BigReal(1), all, coeffs, {zeta::TailModel::fitted, 30});
  PrecisionScope scope(40);
  BigReal exact = rules::closed_form_eval("Z3P1", 0, 30);
  CHECK(approx_equal_rel(z.value, exact, BigReal(5) * ten_to_minus(10)));
  CHECK(approx_equal_rel(z.value, BigReal("0.7836009674833"), BigReal(5) * ten_to_minus(13)));
}

TEST_CASE("records are positive, increasing and interlace for N up to 8") {
  for (int N = 1; N <= 8; ++N) {
    CAPTURE(N);
    const auto& p = cached(N, Parity::plus, 30, 20);
    const auto& m = cached(N, Parity::minus, 30, 20);
    CHECK(p.eigenvalues[0].sign() > 0);
    for (std::size_t j = 0; j < 30; ++j) {
      CHECK(p.eigenvalues[j] < m.eigenvalues[j]);
      if (j + 1 < 30) {
        CHECK(m.eigenvalues[j] < p.eigenvalues[j + 1]);
        CHECK(p.eigenvalues[j] < p.eigenvalues[j + 1]);
      }
    }
    // Growth law E_k ~ C k^(2N/(N+2)): the ratio settles.
    auto all = merge(p, m);
    double ex = 2.0 * N / (N + 2.0);
    double r40 = all.eigenvalues[40].to_double() / std::pow(40.0, ex);
    double r59 = all.eigenvalues[59].to_double() / std::pow(59.0, ex);
    CHECK(std::fabs(r59 / r40 - 1) < 0.02);
  }
}

TEST_CASE("counting check") {
  auto harmonic = merge(cached(2, Parity::plus, 6, 30), cached(2, Parity::minus, 6, 30));
  auto h = counting_check(harmonic);
  for (double r : h.residuals) CHECK(std::fabs(r) < 1e-12);
  CHECK(h.slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!h.missed_eigenvalue_suspected);

  auto cubic = merge(cached(3, Parity::plus, 10, 30), cached(3, Parity::minus, 10, 30));
  auto c = counting_check(cubic);
  for (std::size_t k = 2; k < c.residuals.size(); ++k) CHECK(std::fabs(c.residuals[k]) < 0.2);
  CHECK(!c.missed_eigenvalue_suspected);

  SpectrumRecord gap = cubic;
  gap.eigenvalues.erase(gap.eigenvalues.begin() + 3);
  gap.certified_digits.erase(gap.certified_digits.begin() + 3);
  auto g = counting_check(gap);
  CHECK(g.missed_eigenvalue_suspected);
  CHECK(g.suspect_position == 3);

  SpectrumRecord single = cached(3, Parity::minus, 10, 30);
  single.eigenvalues.erase(single.eigenvalues.begin() + 3);
  single.certified_digits.erase(single.certified_digits.begin() + 3);
  CHECK(counting_check(single).missed_eigenvalue_suspected);
  CHECK(!counting_check(cached(3, Parity::minus, 10, 30)).missed_eigenvalue_suspected);

  SpectrumRecord tiny = cubic;
  tiny.eigenvalues.resize(4);
  tiny.certified_digits.resize(4);
  CHECK_THROWS_AS(counting_check(tiny), Error);
}

TEST_CASE("raising the precision keeps every certified digit") {
  for (int N : {1, 3, 6}) {
    CAPTURE(N);
    auto lo = eigenvalues(N, Parity::minus, 4, 20);
    auto hi = eigenvalues(N, Parity::minus, 4, 40);
    PrecisionScope scope(50);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(approx_equal_rel(lo.eigenvalues[k], hi.eigenvalues[k], BigReal(5) * ten_to_minus(20)));
    }
  }
}

TEST_CASE("matching Wronskian changes sign across an eigenvalue") {
  PrecisionScope scope(40);
  BigReal w_lo = matching_wronskian(2, Parity::minus, BigReal(Rational(29, 10)), BigReal(4), 30);
  BigReal w_hi = matching_wronskian(2, Parity::minus, BigReal(Rational(31, 10)), BigReal(4), 30);
  CHECK(w_lo.sign() != w_hi.sign());
  CHECK(abs(matching_wronskian(2, Parity::minus, BigReal(3), BigReal(4), 30)) < ten_to_minus(30));
}

TEST_CASE("export and import") {
  const auto& rec = cached(3, Parity::minus, 10, 30);
  auto back = spectrum_from_json(to_json(rec));
  CHECK(back.N == 3);
  CHECK(back.parity == Parity::minus);
  REQUIRE(back.size() == rec.size());
  PrecisionScope scope(40);
  for (std::size_t k = 0; k < rec.size(); ++k) {
    CHECK(approx_equal_rel(back.eigenvalues[k], rec.eigenvalues[k], ten_to_minus(31)));
    CHECK(back.certified_digits[k] == 30);
  }
  std::string csv = to_csv(rec);
  CHECK(csv.rfind("N,parity,k,E,certified_digits\n3,-,1,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  CHECK_THROWS_AS(spectrum_from_json("{\"N\": 3}"), Error);
  CHECK_THROWS_AS(spectrum_from_json("not json"), Error);
}

TEST_CASE("merge and split") {
  auto all = merge(cached(3, Parity::plus, 10, 30), cached(3, Parity::minus, 10, 30));
  CHECK(all.parity == Parity::both);
  CHECK(all.full_index(7) == 7);
  auto back = split(all, Parity::minus);
  CHECK(back.size() == 10);
  CHECK(back.full_index(2) == 5);
  CHECK(back.eigenvalues[2] == cached(3, Parity::minus, 10, 30).eigenvalues[2]);
  CHECK_THROWS_AS(merge(cached(3, Parity::minus, 10, 30), cached(3, Parity::plus, 10, 30)), Error);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(eigenvalues(0, Parity::plus, 3, 20), Error);
  CHECK_THROWS_AS(eigenvalues(3, Parity::plus, 0, 20), Error);
  CHECK_THROWS_AS(eigenvalues(3, Parity::both, 3, 20), Error);
  CHECK(parity_from_string("+") == Parity::plus);
  CHECK(parity_from_string("minus") == Parity::minus);
  CHECK_THROWS_AS(parity_from_string("odd"), Error);
}
