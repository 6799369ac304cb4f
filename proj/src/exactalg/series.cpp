#include "hzeta/exactalg.hpp"

namespace hz::alg {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::invalid_argument, "series: truncation orders differ");
  }
}

}  // namespace

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(order());
  for (int n = 0; n <= order(); ++n) r[n] = -(*this)[n];
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  TruncSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] += b[n];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  TruncSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] -= b[n];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const CycloNumber& c) {
  TruncSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] *= c;
  return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  int m = a.order();
  TruncSeries r(m);
  for (int i = 0; i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// (exp a)' = a' exp a  =>  n e_n = sum_{k=1}^n k a_k e_{n-k}.
TruncSeries series_exp(const TruncSeries& a) {
  if (!a[0].is_zero()) {
    throw Error(ErrorCode::nonconstant_term, "series_exp: constant coefficient must be zero");
  }
  int m = a.order();
  TruncSeries e(m);
  e[0] = SymPoly(1L);
  for (int n = 1; n <= m; ++n) {
    SymPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || e[n - k].is_zero()) continue;
      acc.add_scaled(a[k] * e[n - k], CycloNumber(Rational(k, n)));
    }
    e[n] = std::move(acc);
  }
  return e;
}

// a' = a (log a)'  =>  n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}.
TruncSeries series_log(const TruncSeries& a) {
  if (!(a[0] == SymPoly(1L))) {
    throw Error(ErrorCode::nonconstant_term, "series_log: constant coefficient must be one");
  }
  int m = a.order();
  TruncSeries b(m);
  for (int n = 1; n <= m; ++n) {
    SymPoly acc = a[n];
    for (int k = 1; k < n; ++k) {
      if (b[k].is_zero() || a[n - k].is_zero()) continue;
      acc.add_scaled(b[k] * a[n - k], CycloNumber(Rational(-k, n)));
    }
    b[n] = std::move(acc);
  }
  return b;
}

TruncSeries rescale_argument(const TruncSeries& a, const CycloNumber& factor) {
  TruncSeries r(a.order());
  CycloNumber f(1L);
  for (int n = 0; n <= a.order(); ++n) {
    r[n] = a[n] * f;
    f *= factor;
  }
  return r;
}

}  // namespace hz::alg
