#include <doctest.h>

#include "hzeta/sumrules.hpp"

#include <algorithm>
#include <cmath>

using namespace hz;
using namespace hz::alg;
using namespace hz::rules;
using namespace hz::num;

namespace {

SymPoly Z(ZSymbol s, int e = 1) { return SymPoly::var(s, e); }
CycloNumber q(long p, long r = 1) { return CycloNumber(Rational(p, r)); }

// Exact trigonometric values at multiples of nu pi, in Q(zeta_{2(N+2)}).
CycloNumber zt(int N, long k) { return CycloNumber::zeta(conductor(N), k); }
CycloNumber cos_nu(int N, long k) { return (zt(N, k) + zt(N, -k)) * q(1, 2); }
// cot(nu pi) sin(k nu pi)
CycloNumber cot_sin(int N, long k) {
  return (zt(N, 1) + zt(N, -1)) * (zt(N, k) - zt(N, -k)) / ((zt(N, 1) - zt(N, -1)) * q(2));
}
CycloNumber sqrt2() { return CycloNumber::zeta(8) + CycloNumber::zeta(8, -1); }
CycloNumber sqrt5() { return (CycloNumber::zeta(10) + CycloNumber::zeta(10, -1)) * q(2) - q(1); }
CycloNumber golden() { return CycloNumber::zeta(10) + CycloNumber::zeta(10, -1); }

SumRuleIdentity make(int N, int n, SymPoly lhs, SymPoly rhs, Basis basis = Basis::fulltwisted) {
  SumRuleIdentity id;
  id.N = N;
  id.order = n;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.basis = basis;
  return id;
}

// The generic left side of the hierarchy.
SymPoly generic_lhs(int N, int n) { return Z(Zf(n)) * cos_nu(N, 2 * n) - Z(Zt(n)) * cot_sin(N, 2 * n); }

const SumRuleIdentity& at(const std::vector<SumRuleIdentity>& ids, int n) { return ids.at(static_cast<std::size_t>(n)); }

}  // namespace

TEST_CASE("symmetry order and conductor") {
  CHECK(symmetry_order(2) == 2);
  CHECK(symmetry_order(4) == 3);
  CHECK(symmetry_order(6) == 4);
  CHECK(symmetry_order(1) == 3);
  CHECK(symmetry_order(3) == 5);
  CHECK(conductor(3) == 10);
  CHECK_THROWS_AS(symmetry_order(0), Error);
}

TEST_CASE("order zero: exp(Z'(0)) = sin(nu pi)") {
  for (int N = 1; N <= 8; ++N) {
    auto ids = derive_sum_rules(N, 0);
    REQUIRE(ids.size() == 1);
    const auto& id = ids[0];
    CHECK(id.classification == Classification::Zprime0);
    CHECK(id.exp_scale == 2);
    CHECK(id.lhs == Z({ZKind::ZplusPrime0, 0}) + Z({ZKind::ZminusPrime0, 0}));
    CycloNumber sin2 = (q(2) - zt(N, 2) - zt(N, -2)) * q(1, 4);
    CHECK(id.rhs == SymPoly(sin2));
    PrecisionScope scope(40);
    BigReal s = sin(num::pi() / BigReal(N + 2));
    CHECK(approx_equal(id.rhs.constant_term().embed(30).re, s * s, ten_to_minus(30)));
  }
}

TEST_CASE("order one: ratio relation, degenerate for the harmonic case") {
  for (int N : {1, 3, 4, 5, 6, 7, 8}) {
    auto ids = derive_sum_rules(N, 1);
    CHECK(at(ids, 1).rhs.is_zero());
    CHECK(proportional(at(ids, 1), make(N, 1, generic_lhs(N, 1), SymPoly())));
  }
  auto h = derive_sum_rules(2, 1);
  CHECK(at(h, 1).degenerate);
  CHECK(at(h, 1).lhs.is_zero());
  CHECK(at(h, 1).to_string().find("degenerate") != std::string::npos);
  // Table rows for Z_N(1)/Z_N^P(1).
  CHECK(proportional(at(derive_sum_rules(4, 1), 1), make(4, 1, Z(Zf(1)) - Z(Zt(1)) * q(3), SymPoly())));
  CHECK(proportional(at(derive_sum_rules(6, 1), 1),
                     make(6, 1, Z(Zf(1)) - Z(Zt(1)) * (q(1) + sqrt2()), SymPoly())));
  CHECK(proportional(at(derive_sum_rules(1, 1), 1), make(1, 1, Z(Zf(1)) + Z(Zt(1)), SymPoly())));
  CHECK(proportional(at(derive_sum_rules(3, 1), 1),
                     make(3, 1, Z(Zf(1)) - Z(Zt(1)) * (q(2) + sqrt5()), SymPoly())));
  // N = 1 order one is the Zplus cell: Z_1^+(1) = 0.
  auto a = convert_basis(at(derive_sum_rules(1, 1), 1), Basis::plusminus);
  CHECK(a.lhs == Z(Zp(1)));
}

TEST_CASE("orders two and three in general form") {
  for (int N = 1; N <= 8; ++N) {
    auto ids = derive_sum_rules(N, 3);
    SymPoly p1 = Z(Zt(1)), p2 = Z(Zt(2));
    CycloNumber c2 = cos_nu(N, 1) * cos_nu(N, 1);
    SumRuleIdentity e2 = make(N, 2, generic_lhs(N, 2), p1 * p1 * (c2 * q(-4)));
    SumRuleIdentity e3 = make(N, 3, generic_lhs(N, 3),
                              (p1 * p1 * p1 * (c2 * q(2)) - p1 * p2 * (cos_nu(N, 2) * q(3))) * (c2 * q(4)));
    CHECK_MESSAGE(proportional(at(ids, 2), e2), "N=", N);
    CHECK_MESSAGE(proportional(at(ids, 3), e3), "N=", N);
  }
}

TEST_CASE("generic identities keep the displayed normalization") {
  auto ids = derive_sum_rules(5, 6);
  for (int n : {1, 2, 5, 6}) {
    REQUIRE(at(ids, n).classification == Classification::generic);
    CHECK(at(ids, n).lhs == generic_lhs(5, n));
  }
}

TEST_CASE("harmonic table entries") {
  auto ids = derive_sum_rules(2, 3);
  SymPoly p1 = Z(Zt(1));
  CHECK(at(ids, 2).classification == Classification::Zfull);
  CHECK(at(ids, 2).lhs == Z(Zf(2)));
  CHECK(at(ids, 2).rhs == p1 * p1 * q(2));
  CHECK(at(ids, 3).classification == Classification::Ztwisted);
  CHECK(at(ids, 3).lhs == Z(Zt(3)));
  CHECK(at(ids, 3).rhs == p1 * p1 * p1 * q(2));
}

TEST_CASE("quartic table entries") {
  auto ids = derive_sum_rules(4, 3);
  SymPoly p1 = Z(Zt(1)), p2 = Z(Zt(2));
  CHECK(proportional(at(ids, 2), make(4, 2, Z(Zt(2)) * q(3) + Z(Zf(2)), p1 * p1 * q(6))));
  CHECK(at(ids, 3).lhs == Z(Zf(3)));
  CHECK(at(ids, 3).rhs == (p1 * p2 - p1 * p1 * p1) * q(9, 2));
  SumRuleIdentity full = autonomous_full_identity(4, 3);
  SymPoly z1 = Z(Zf(1)), z2 = Z(Zf(2));
  CHECK(full.lhs == Z(Zf(3)));
  CHECK(full.rhs == z1 * z1 * z1 * q(1, 6) - z1 * z2 * q(1, 2));
}

TEST_CASE("sextic identities") {
  auto ids = derive_sum_rules(6, 6);
  SymPoly p1 = Z(Zt(1)), p2 = Z(Zt(2)), p3 = Z(Zt(3)), p5 = Z(Zt(5));
  CycloNumber r2 = sqrt2();
  // Z_6^P(2) = sqrt2 Z_6^P(1)^2
  CHECK(at(ids, 2).classification == Classification::Ztwisted);
  CHECK(at(ids, 2).lhs == Z(Zt(2)));
  CHECK(at(ids, 2).rhs == p1 * p1 * r2);
  // (1 + sqrt2) Z^P(3) + Z(3) = -(3 sqrt2 + 4) Z^P(1)^3 + 3(2 + sqrt2) Z^P(1) Z^P(2)
  CHECK(proportional(at(ids, 3), make(6, 3, Z(Zt(3)) * (q(1) + r2) + Z(Zf(3)),
                                      p1 * p1 * p1 * (-(r2 * q(3) + q(4))) + p1 * p2 * ((q(2) + r2) * q(3)))));
  // Six-term identity for Z_6^P(6).
  SymPoly expected = p1.pow(6) * ((q(210) + r2 * q(151)) * q(-1, 30)) +
                     p1.pow(4) * p2 * ((q(34) + r2 * q(23)) * q(1, 2)) -
                     p1 * p1 * p2 * p2 * ((q(18) + r2 * q(15)) * q(1, 2)) +
                     p2.pow(3) * ((q(2) + r2) * q(1, 2)) - p1.pow(3) * p3 * ((q(6) + r2 * q(5)) * q(2, 3)) +
                     p1 * p2 * p3 * ((q(2) + r2) * q(2)) - p3 * p3 * (r2 * q(1, 3)) + p1 * p5 * (r2 * q(6, 5));
  CHECK(at(ids, 6).classification == Classification::Ztwisted);
  CHECK(at(ids, 6).lhs == Z(Zt(6)));
  CHECK(at(ids, 6).rhs == expected);
  CHECK(at(ids, 6).rhs.size() == 8);
  // Autonomous Z_6(4).
  SumRuleIdentity full = autonomous_full_identity(6, 4);
  SymPoly z1 = Z(Zf(1)), z3 = Z(Zf(3));
  CHECK(full.lhs == Z(Zf(4)));
  CHECK(full.rhs == z1.pow(4) * ((q(248) - r2 * q(175)) * q(1, 3)) - z1 * z3 * ((q(2) - r2) * q(4, 3)));
}

TEST_CASE("Airy-case table entries") {
  auto ids = derive_sum_rules(1, 3);
  SymPoly p1 = Z(Zt(1)), p2 = Z(Zt(2));
  auto pm2 = convert_basis(at(ids, 2), Basis::plusminus);
  CHECK(at(ids, 2).classification == Classification::Zminus);
  CHECK(pm2.lhs == Z(Zm(2)));
  CHECK(pm2.rhs == p1 * p1);
  CHECK(at(ids, 3).lhs == Z(Zf(3)));
  CHECK(at(ids, 3).rhs == p1 * p1 * p1 * q(1, 2) + p1 * p2 * q(3, 2));
  SumRuleIdentity full = autonomous_full_identity(1, 3);
  SymPoly z1 = Z(Zf(1)), z2 = Z(Zf(2));
  CHECK(full.rhs == z1 * z1 * z1 * q(5, 2) - z1 * z2 * q(3, 2));
}

TEST_CASE("cubic identities") {
  auto ids = derive_sum_rules(3, 5);
  SymPoly p1 = Z(Zt(1)), p2 = Z(Zt(2));
  auto pm2 = convert_basis(at(ids, 2), Basis::plusminus);
  CHECK(at(ids, 2).classification == Classification::Zplus);
  CHECK(pm2.lhs == Z(Zp(2)));
  CHECK(pm2.rhs == p1 * p1 * golden());
  auto pm3 = convert_basis(at(ids, 3), Basis::plusminus);
  CHECK(at(ids, 3).classification == Classification::Zminus);
  CHECK(pm3.lhs == Z(Zm(3)));
  CHECK(pm3.rhs == p1 * p1 * p1 * (-(golden() + q(1, 2))) + p1 * p2 * q(3, 2));

  SumRuleIdentity full = autonomous_full_identity(3, 5);
  SymPoly z1 = Z(Zf(1)), z2 = Z(Zf(2)), z3 = Z(Zf(3)), z4 = Z(Zf(4));
  CycloNumber r5 = sqrt5();
  SymPoly expected = z1.pow(5) * ((q(369163) - r5 * q(165095)) * q(1, 48)) +
                     z1.pow(3) * z2 * ((q(2503) - r5 * q(1119)) * q(5, 24)) +
                     z1 * z2 * z2 * ((q(23) - r5 * q(11)) * q(5, 16)) +
                     z1 * z1 * z3 * ((q(-31) + r5 * q(14)) * q(5, 6)) - z2 * z3 * q(5, 6) +
                     z1 * z4 * ((q(-7) + r5 * q(3)) * q(5, 8));
  CHECK(full.lhs == Z(Zf(5)));
  CHECK(full.rhs == expected);
  CHECK_THROWS_AS(autonomous_full_identity(3, 4), Error);
  try {
    autonomous_full_identity(6, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_multiple);
  }
}

TEST_CASE("literal and factored routes agree") {
  for (int N = 1; N <= 6; ++N) {
    auto a = derive_sum_rules(N, 5, Route::factored);
    auto b = derive_sum_rules(N, 5, Route::literal);
    for (std::size_t n = 0; n < a.size(); ++n) CHECK_MESSAGE(a[n] == b[n], "N=", N, " n=", n);
  }
}

TEST_CASE("homogeneity and lower-order symbols for N up to 6, n up to 8") {
  for (int N = 1; N <= 6; ++N) {
    auto ids = derive_sum_rules(N, 8);
    for (const auto& id : ids) {
      if (id.order == 0) continue;
      CHECK(id.rhs.is_homogeneous(id.order));
      CHECK(id.lhs.is_homogeneous(id.order));
      CHECK(id.rhs.max_order() < id.order);
    }
  }
}

TEST_CASE("basis round trip") {
  for (int N : {3, 6}) {
    for (const auto& id : derive_sum_rules(N, 6)) {
      auto pm = convert_basis(id, Basis::plusminus);
      CHECK(convert_basis(pm, Basis::fulltwisted) == id);
    }
  }
}

TEST_CASE("classification matches the vanishing pattern of the left side") {
  for (int N = 1; N <= 12; ++N) {
    const int L = symmetry_order(N);
    auto ids = derive_sum_rules(N, std::min(2 * L + 2, 10));
    for (int n = 1; n <= 3 * L; ++n) {
      bool full_zero = cos_nu(N, 2 * n).is_zero();
      bool twisted_zero = cot_sin(N, 2 * n).is_zero();
      CycloNumber a = cos_nu(N, 2 * n), b = cot_sin(N, 2 * n);
      bool minus_zero = (a + b).is_zero();  // coefficient of Zminus
      bool plus_zero = (a - b).is_zero();   // coefficient of Zplus
      Classification expected = Classification::generic;
      if (twisted_zero) expected = Classification::Zfull;
      else if (full_zero) expected = Classification::Ztwisted;
      else if (minus_zero) expected = Classification::Zplus;
      else if (plus_zero) expected = Classification::Zminus;
      CHECK_MESSAGE(classify_lhs(N, n) == expected, "N=", N, " n=", n);
      if (n < static_cast<int>(ids.size()) && !(N == 2 && n == 1)) {
        const auto& id = at(ids, n);
        CHECK(id.classification == expected);
        // The derived left side vanishes exactly where the trigonometric weights do.
        CHECK(id.lhs.linear_coefficient(Zt(n)).is_zero() == (expected == Classification::Zfull));
      }
      // Periodicity with period L_N.
      CHECK(classify_lhs(N, n) == classify_lhs(N, n + L));
    }
  }
}

TEST_CASE("classification reproduces the synoptic tables") {
  using C = Classification;
  struct Cell {
    int N, n;
    C c;
  };
  // Every displayed cell of both tables for n = 1..7.
  const std::vector<Cell> cells = {
      {2, 1, C::Ztwisted}, {2, 2, C::Zfull},    {2, 3, C::Ztwisted}, {2, 4, C::Zfull},    {2, 5, C::Ztwisted},
      {2, 6, C::Zfull},    {4, 1, C::generic},  {4, 2, C::generic},  {4, 3, C::Zfull},    {4, 4, C::generic},
      {4, 5, C::generic},  {4, 6, C::Zfull},    {6, 1, C::generic},  {6, 2, C::Ztwisted}, {6, 3, C::generic},
      {6, 4, C::Zfull},    {6, 5, C::generic},  {6, 6, C::Ztwisted}, {8, 1, C::generic},  {8, 2, C::generic},
      {8, 3, C::generic},  {8, 4, C::generic},  {8, 5, C::Zfull},    {8, 6, C::generic},  {10, 1, C::generic},
      {10, 2, C::generic}, {10, 3, C::Ztwisted}, {10, 4, C::generic}, {10, 5, C::generic}, {10, 6, C::Zfull},
      {1, 1, C::Zplus},    {1, 2, C::Zminus},   {1, 3, C::Zfull},    {1, 4, C::Zplus},    {1, 5, C::Zminus},
      {1, 6, C::Zfull},    {1, 7, C::Zplus},    {3, 1, C::generic},  {3, 2, C::Zplus},    {3, 3, C::Zminus},
      {3, 4, C::generic},  {3, 5, C::Zfull},    {3, 6, C::generic},  {3, 7, C::Zplus},    {5, 1, C::generic},
      {5, 2, C::generic},  {5, 3, C::Zplus},    {5, 4, C::Zminus},   {5, 5, C::generic},  {5, 6, C::generic},
      {5, 7, C::Zfull},    {7, 1, C::generic},  {7, 2, C::generic},  {7, 3, C::generic},  {7, 4, C::Zplus},
      {7, 5, C::Zminus},   {7, 6, C::generic},  {7, 7, C::generic},  {9, 1, C::generic},  {9, 2, C::generic},
      {9, 3, C::generic},  {9, 4, C::generic},  {9, 5, C::Zplus},    {9, 6, C::Zminus},   {9, 7, C::generic},
  };
  int mismatches = 0;
  for (const auto& cell : cells) {
    if (classify_lhs(cell.N, cell.n) != cell.c) {
      ++mismatches;
      MESSAGE("mismatch at N=", cell.N, " n=", cell.n);
    }
  }
  CHECK(mismatches == 0);
  for (int N = 1; N <= 10; ++N) CHECK(classify_lhs(N, 0) == C::Zprime0);
}
