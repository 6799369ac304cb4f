#include "hzeta/sumrules.hpp"

namespace hz::rules {

using alg::TruncSeries;
using alg::ZKind;

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Zfull: return "Zfull";
    case Classification::Ztwisted: return "Ztwisted";
    case Classification::Zplus: return "Zplus";
    case Classification::Zminus: return "Zminus";
    case Classification::generic: return "generic";
    case Classification::Zprime0: return "Zprime0";
  }
  return "?";
}

Classification classification_from_string(const std::string& s) {
  for (auto c : {Classification::Zfull, Classification::Ztwisted, Classification::Zplus, Classification::Zminus,
                 Classification::generic, Classification::Zprime0}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::invalid_argument, "unknown classification '" + s + "'");
}

namespace {

void require_degree(int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "degree N must be at least 1");
}

SymPoly Z(ZSymbol s) { return SymPoly::var(s); }

CycloNumber frac(long p, long q) { return CycloNumber(Rational(p, q)); }

// Left side of log Q(lambda) - log[RHS(lambda)/2i] as a truncated series.
TruncSeries functional_log(int N, int M, Route route) {
  const int m = conductor(N);
  const CycloNumber eps = CycloNumber::zeta(m, 1);
  const CycloNumber eps_inv = CycloNumber::zeta(m, -1);
  const CycloNumber omega = CycloNumber::zeta(m, 4);
  const CycloNumber inv_d = (eps - eps_inv).inverse();

  TruncSeries t(M);
  if (route == Route::factored) {
    TruncSeries u(M), v(M);
    CycloNumber w(1L);
    for (int n = 1; n <= M; ++n) {
      w *= omega;
      long sgn = (n % 2 == 1) ? 1 : -1;
      u[n] = Z(alg::Zf(n)) * ((CycloNumber(1L) + w) * frac(sgn, 2L * n));
      v[n] = Z(alg::Zt(n)) * ((CycloNumber(1L) - w) * frac(sgn, 2L * n));
    }
    TruncSeries g = (alg::series_exp(v) * eps - alg::series_exp(-v) * eps_inv) * inv_d;
    t = u + alg::series_log(g);
  } else {
    TruncSeries a(M), b(M);
    for (int n = 1; n <= M; ++n) {
      long sgn = (n % 2 == 1) ? 1 : -1;
      a[n] = (Z(alg::Zf(n)) + Z(alg::Zt(n))) * frac(sgn, 2L * n);
      b[n] = (Z(alg::Zf(n)) - Z(alg::Zt(n))) * frac(sgn, 2L * n);
    }
    TruncSeries s1 = a + alg::rescale_argument(b, omega);
    TruncSeries s2 = alg::rescale_argument(a, omega) + b;
    TruncSeries q = (alg::series_exp(s1) * eps - alg::series_exp(s2) * eps_inv) * inv_d;
    t = alg::series_log(q);
  }
  if (N == 2 && M >= 1) {
    // log e^{-i pi lambda/4}
    t[1] -= Z(alg::PiSym()) * (CycloNumber::zeta(8, 2) * frac(-1, 4));
  }
  return t;
}

SumRuleIdentity order_zero(int N) {
  const int m = conductor(N);
  CycloNumber d = CycloNumber::zeta(m, 1) - CycloNumber::zeta(m, -1);
  SumRuleIdentity id;
  id.N = N;
  id.order = 0;
  id.lhs = Z({ZKind::ZplusPrime0, 0}) + Z({ZKind::ZminusPrime0, 0});
  // (eps - 1/eps) exp(-Z'(0)) = 2i, squared to stay inside the field.
  id.rhs = SymPoly(d * d * frac(-1, 4));
  id.exp_scale = 2;
  id.classification = Classification::Zprime0;
  return id;
}

// Raw identities for orders 0..M in the form cos(2n nu pi) Z(n) - cot(nu pi) sin(2n nu pi) Z^P(n) = P.
std::vector<SumRuleIdentity> raw_identities(int N, int M, Route route) {
  require_degree(N);
  if (M < 0) throw Error(ErrorCode::invalid_argument, "n_max must be nonnegative");
  std::vector<SumRuleIdentity> out;
  out.push_back(order_zero(N));
  if (M == 0) return out;
  const int m = conductor(N);
  TruncSeries t = functional_log(N, M, route);
  for (int n = 1; n <= M; ++n) {
    CycloNumber k = CycloNumber::zeta(m, -2L * n) * CycloNumber(n % 2 == 1 ? long(n) : -long(n));
    const SymPoly& tn = t[n];
    SymPoly lin = Z(alg::Zf(n)) * tn.linear_coefficient(alg::Zf(n)) +
                  Z(alg::Zt(n)) * tn.linear_coefficient(alg::Zt(n));
    SymPoly rest = tn - lin;
    SumRuleIdentity id;
    id.N = N;
    id.order = n;
    id.lhs = lin * k;
    id.rhs = -(rest * k);
    id.classification = classify_lhs(N, n);
    if (!id.rhs.is_homogeneous(n)) {
      throw Error(ErrorCode::internal_inconsistency,
                  "sum rule at order " + std::to_string(n) + " is not homogeneous");
    }
    for (const auto& s : id.rhs.symbols()) {
      if (s.kind != ZKind::Pi && (s.kind != ZKind::Ztwisted || s.order >= n)) {
        throw Error(ErrorCode::internal_inconsistency,
                    "sum rule at order " + std::to_string(n) + " has unexpected symbol " + s.to_string());
      }
    }
    out.push_back(std::move(id));
  }
  return out;
}

SumRuleIdentity scaled(SumRuleIdentity id, const CycloNumber& c) {
  id.lhs *= c;
  id.rhs *= c;
  return id;
}

SumRuleIdentity normalize(SumRuleIdentity id) {
  const int n = id.order;
  auto divide_by = [&](const CycloNumber& c) {
    if (c.is_zero()) {
      throw Error(ErrorCode::internal_inconsistency,
                  "classified symbol missing from the order-" + std::to_string(n) + " identity");
    }
    return scaled(std::move(id), c.inverse());
  };
  switch (id.classification) {
    case Classification::Zfull:
      if (!id.lhs.linear_coefficient(alg::Zt(n)).is_zero()) {
        throw Error(ErrorCode::internal_inconsistency, "Zfull identity retains a twisted term");
      }
      return divide_by(id.lhs.linear_coefficient(alg::Zf(n)));
    case Classification::Ztwisted:
      if (!id.lhs.linear_coefficient(alg::Zf(n)).is_zero()) {
        throw Error(ErrorCode::internal_inconsistency, "Ztwisted identity retains a full term");
      }
      return divide_by(id.lhs.linear_coefficient(alg::Zt(n)));
    case Classification::Zplus:
    case Classification::Zminus: {
      SumRuleIdentity pm = convert_basis(id, Basis::plusminus);
      bool plus = id.classification == Classification::Zplus;
      ZSymbol keep = plus ? alg::Zp(n) : alg::Zm(n);
      ZSymbol drop = plus ? alg::Zm(n) : alg::Zp(n);
      if (!pm.lhs.linear_coefficient(drop).is_zero()) {
        throw Error(ErrorCode::internal_inconsistency, "parity identity retains the opposite parity");
      }
      return divide_by(pm.lhs.linear_coefficient(keep));
    }
    default: return id;
  }
}

}  // namespace

int symmetry_order(int N) {
  require_degree(N);
  return (N % 2 == 0) ? N / 2 + 1 : N + 2;
}

int conductor(int N) {
  require_degree(N);
  return 2 * (N + 2);
}

Classification classify_lhs(int N, int n) {
  require_degree(N);
  if (n < 0) throw Error(ErrorCode::invalid_argument, "classify_lhs: order must be nonnegative");
  if (n == 0) return Classification::Zprime0;
  const int L = symmetry_order(N);
  if (n % L == 0) return Classification::Zfull;
  if (N % 4 == 2 && (2 * n) % L == 0 && ((2 * n) / L) % 2 == 1) return Classification::Ztwisted;
  if (N % 2 == 1) {
    if ((2 * n + 1) % L == 0) return Classification::Zplus;
    if ((2 * n - 1) % L == 0) return Classification::Zminus;
  }
  return Classification::generic;
}

std::vector<SumRuleIdentity> derive_sum_rules(int N, int n_max, Route route) {
  std::vector<SumRuleIdentity> raw = raw_identities(N, n_max, route);
  for (auto& id : raw) {
    if (id.order == 0) continue;
    if (N == 2 && id.order == 1) {
      id.lhs = SymPoly();
      id.rhs = SymPoly();
      id.degenerate = true;
      continue;
    }
    id = normalize(std::move(id));
  }
  return raw;
}

SumRuleIdentity convert_basis(const SumRuleIdentity& id, Basis target) {
  if (id.basis == target) return id;
  SumRuleIdentity out = id;
  out.basis = target;
  if (id.order == 0 || id.degenerate) return out;
  const int n = id.order;
  CycloNumber half(Rational(1, 2));
  if (target == Basis::plusminus) {
    SymPoly f = Z(alg::Zp(n)) + Z(alg::Zm(n));
    SymPoly t = Z(alg::Zp(n)) - Z(alg::Zm(n));
    out.lhs = id.lhs.substitute([&](ZSymbol s) -> const SymPoly* {
      if (s == alg::Zf(n)) return &f;
      if (s == alg::Zt(n)) return &t;
      return nullptr;
    });
  } else {
    SymPoly p = (Z(alg::Zf(n)) + Z(alg::Zt(n))) * half;
    SymPoly q = (Z(alg::Zf(n)) - Z(alg::Zt(n))) * half;
    out.lhs = id.lhs.substitute([&](ZSymbol s) -> const SymPoly* {
      if (s == alg::Zp(n)) return &p;
      if (s == alg::Zm(n)) return &q;
      return nullptr;
    });
  }
  return out;
}

SumRuleIdentity autonomous_full_identity(int N, int n) {
  require_degree(N);
  const int L = symmetry_order(N);
  if (n <= 0 || n % L != 0) {
    throw Error(ErrorCode::not_a_multiple,
                "autonomous_full_identity: order " + std::to_string(n) + " is not a positive multiple of " +
                    std::to_string(L));
  }
  std::vector<SumRuleIdentity> raw = raw_identities(N, n, Route::factored);
  // Solve each lower raw identity for its twisted symbol where possible.
  std::map<int, SymPoly> twisted_value;
  auto solve = [&](int mo) -> const SymPoly* {
    auto it = twisted_value.find(mo);
    if (it != twisted_value.end()) return &it->second;
    const SumRuleIdentity& id = raw[static_cast<std::size_t>(mo)];
    CycloNumber b = id.lhs.linear_coefficient(alg::Zt(mo));
    if (b.is_zero()) {
      throw Error(ErrorCode::internal_inconsistency,
                  "cannot eliminate Ztwisted(" + std::to_string(mo) + ") from the autonomous identity");
    }
    CycloNumber a = id.lhs.linear_coefficient(alg::Zf(mo));
    SymPoly value = (id.rhs - Z(alg::Zf(mo)) * a) * b.inverse();
    return &twisted_value.emplace(mo, std::move(value)).first->second;
  };

  SumRuleIdentity out = raw[static_cast<std::size_t>(n)];
  for (;;) {
    int top = -1;
    for (const auto& s : out.rhs.symbols()) {
      if (s.kind == ZKind::Ztwisted) top = std::max(top, s.order);
    }
    if (top < 0) break;
    const SymPoly* v = solve(top);
    out.rhs = out.rhs.substitute(alg::Zt(top), *v);
  }
  out.classification = Classification::Zfull;
  return normalize(std::move(out));
}

bool proportional(const SumRuleIdentity& a, const SumRuleIdentity& b0) {
  if (a.order != b0.order || a.N != b0.N) return false;
  SumRuleIdentity b = convert_basis(b0, a.basis);
  if (a.lhs.is_zero() || b.lhs.is_zero()) return a.lhs.is_zero() && b.lhs.is_zero() && a.rhs == b.rhs;
  const auto& [mono, ca] = *a.lhs.terms().begin();
  CycloNumber cb = b.lhs.coefficient(mono);
  if (cb.is_zero()) return false;
  CycloNumber s = ca / cb;
  return a.lhs == b.lhs * s && a.rhs == b.rhs * s;
}

num::BigComplex identity_residual(const SumRuleIdentity& id,
                                  const std::function<num::BigComplex(ZSymbol)>& value, int digits) {
  PrecisionScope scope(digits + kGuardDigits);
  num::BigComplex l = id.lhs.evaluate(value, digits);
  num::BigComplex r = id.rhs.evaluate(value, digits);
  if (id.exp_scale != 0) return num::exp(l * BigReal(id.exp_scale)) - r;
  return l - r;
}

std::string SumRuleIdentity::to_string() const {
  std::string head = "N=" + std::to_string(N) + " n=" + std::to_string(order) + " [" +
                     rules::to_string(classification) + "]";
  if (degenerate) return head + " degenerate: 0 = 0";
  if (exp_scale != 0) {
    return head + " exp(" + std::to_string(exp_scale) + "*(" + lhs.to_string() + ")) = " + rhs.to_string();
  }
  return head + " " + lhs.to_string() + " = " + rhs.to_string();
}

}  // namespace hz::rules
