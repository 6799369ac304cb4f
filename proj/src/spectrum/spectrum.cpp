#include "hzeta/spectrum.hpp"

#include "hzeta/error.hpp"
#include "hzeta/zetafns.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <type_traits>
#include <sstream>

namespace hz::spec {

using num::PrecisionScope;

std::string to_string(Parity p) {
  switch (p) {
    case Parity::plus: return "+";
    case Parity::minus: return "-";
    case Parity::both: return "both";
  }
  return "?";
}

Parity parity_from_string(const std::string& s) {
  if (s == "+" || s == "plus") return Parity::plus;
  if (s == "-" || s == "minus") return Parity::minus;
  if (s == "both") return Parity::both;
  throw Error(ErrorCode::invalid_argument, "unknown parity '" + s + "'");
}

int SpectrumRecord::full_index(std::size_t j) const {
  int i = static_cast<int>(j);
  switch (parity) {
    case Parity::plus: return 2 * i;
    case Parity::minus: return 2 * i + 1;
    case Parity::both: return i;
  }
  return i;
}

namespace {

// Scalar helpers shared by the double and BigReal shooting code.
double scale_down(double x, long e) { return std::ldexp(x, static_cast<int>(-e)); }
BigReal scale_down(const BigReal& x, long e) { return num::ldexp(x, -e); }
long binary_exponent(double x) {
  int e = 0;
  std::frexp(x, &e);
  return e;
}
long binary_exponent(const BigReal& x) { return x.is_zero() ? 0 : x.exponent(); }
double magnitude(double x) { return std::fabs(x); }
BigReal magnitude(const BigReal& x) { return num::abs(x); }
double root(double x) { return std::sqrt(x); }
double to_double(double x) { return x; }
double to_double(const BigReal& x) { return x.to_double(); }
BigReal root(const BigReal& x) { return num::sqrt(x); }

// Integration domain for energies up to `E`: match point past the turning point and
// a cut-off where the WKB decay from the match point reaches 10^-(digits+10).
struct Domain {
  double energy;
  double match;
  double qmax;
};

Domain make_domain(int N, double E, int digits) {
  double qt = std::pow(std::max(E, 1e-6), 1.0 / N);
  Domain d;
  d.energy = E;
  d.match = 1.2 * qt;
  double target = (digits + 10) * std::log(10.0);
  double q = d.match, acc = 0, dq = std::max(qt, 1.0) / 400.0;
  while (acc < target) {
    double v = std::pow(q + 0.5 * dq, N) - E;
    acc += std::sqrt(std::max(v, 0.0)) * dq;
    q += dq;
  }
  d.qmax = q;
  return d;
}

double step_size(int N, double E, double q) {
  double v = std::pow(q + 0.25, N);
  return std::min(0.25, 4.0 / std::sqrt(1.0 + std::fabs(E) + v));
}

template <class T>
struct Shooter {
  int N;
  T E;
  T tol;
  int max_order;
  std::vector<T> a, w;

  // One Taylor step of psi'' = (q^N - E) psi from q0 to q0 + h.
  void step(const T& q0, const T& h, T& psi, T& dpsi) {
    // w_j = binom(N, j) q0^(N-j) h^j
    w.assign(static_cast<std::size_t>(N) + 1, T(0));
    {
      T hp(1);
      for (int j = 0; j <= N; ++j) {
        T qp(1);
        for (int i = 0; i < N - j; ++i) qp = qp * q0;
        double binom = 1;
        for (int i = 0; i < j; ++i) binom = binom * (N - i) / (i + 1);
        w[static_cast<std::size_t>(j)] = T(binom) * qp * hp;
        hp = hp * h;
      }
    }
    T h2 = h * h;
    if constexpr (std::is_same_v<T, BigReal>) {
      step_mpfr(h2, h, psi, dpsi);
      return;
    }
    a.assign(2, T(0));
    a[0] = psi;
    a[1] = dpsi * h;
    T sum = a[0] + a[1];
    T dsum = a[1];
    int small = 0;
    for (int i = 0; i + 2 <= max_order; ++i) {
      T acc = -(E * a[static_cast<std::size_t>(i)]);
      for (int j = 0; j <= std::min(i, N); ++j) {
        acc += w[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i - j)];
      }
      T next = h2 * acc / T(static_cast<double>((i + 1) * (i + 2)));
      a.push_back(next);
      sum += next;
      dsum += next * T(static_cast<double>(i + 2));
      T scale = magnitude(sum) + magnitude(dsum);
      if (magnitude(next) * T(static_cast<double>(i + 3)) <= tol * scale) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    psi = sum;
    dpsi = dsum / h;
  }

  // Allocation-free version of the recurrence for MPFR values.
  void step_mpfr(const BigReal& h2, const BigReal& h, BigReal& psi, BigReal& dpsi) {
    auto need = static_cast<std::size_t>(max_order) + 1;
    if (a.size() < need) a.resize(need);
    BigReal acc, next, sum, dsum, tmp;
    mpfr_set(a[0].get(), psi.get(), MPFR_RNDN);
    mpfr_mul(a[1].get(), dpsi.get(), h.get(), MPFR_RNDN);
    mpfr_add(sum.get(), a[0].get(), a[1].get(), MPFR_RNDN);
    mpfr_set(dsum.get(), a[1].get(), MPFR_RNDN);
    long tol_bits = num::working_bits() + 4;
    int small = 0;
    for (int i = 0; i + 2 <= max_order; ++i) {
      auto ui = static_cast<std::size_t>(i);
      mpfr_mul(acc.get(), E.get(), a[ui].get(), MPFR_RNDN);
      mpfr_neg(acc.get(), acc.get(), MPFR_RNDN);
      for (int j = 0; j <= std::min(i, N); ++j) {
        mpfr_fma(acc.get(), w[static_cast<std::size_t>(j)].get(), a[ui - static_cast<std::size_t>(j)].get(), acc.get(),
                 MPFR_RNDN);
      }
      mpfr_mul(next.get(), acc.get(), h2.get(), MPFR_RNDN);
      mpfr_div_ui(next.get(), next.get(), static_cast<unsigned long>((i + 1) * (i + 2)), MPFR_RNDN);
      mpfr_set(a[ui + 2].get(), next.get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), next.get(), MPFR_RNDN);
      mpfr_mul_ui(tmp.get(), next.get(), static_cast<unsigned long>(i + 2), MPFR_RNDN);
      mpfr_add(dsum.get(), dsum.get(), tmp.get(), MPFR_RNDN);
      bool negligible = mpfr_zero_p(next.get()) ||
                        (!mpfr_zero_p(tmp.get()) &&
                         mpfr_get_exp(tmp.get()) + tol_bits <
                             std::max(mpfr_zero_p(sum.get()) ? LONG_MIN / 2 : mpfr_get_exp(sum.get()),
                                      mpfr_zero_p(dsum.get()) ? LONG_MIN / 2 : mpfr_get_exp(dsum.get())));
      if (negligible) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    mpfr_set(psi.get(), sum.get(), MPFR_RNDN);
    mpfr_div(dpsi.get(), dsum.get(), h.get(), MPFR_RNDN);
  }

  static void renormalize(T& psi, T& dpsi) {
    long e = std::max(binary_exponent(psi), binary_exponent(dpsi));
    psi = scale_down(psi, e);
    dpsi = scale_down(dpsi, e);
  }

  T wronskian(bool neumann, const Domain& d) {
    // The step grid depends only on the domain, so W is smooth in E across a bracket.
    double e_est = d.energy;
    T psi_out(neumann ? 1 : 0), dpsi_out(neumann ? 0 : 1);
    // Positions are carried in T: rounding them in double would shift the grid.
    T q(0);
    const T match(d.match);
    while (q < match) {
      double hd = step_size(N, e_est, to_double(q));
      T h = hd < to_double(match - q) ? T(hd) : match - q;
      step(q, h, psi_out, dpsi_out);
      renormalize(psi_out, dpsi_out);
      q += h;
    }
    // Decaying WKB data at qmax: psi'/psi = -sqrt(V - E) - V'/(4 (V - E)).
    T qm(d.qmax);
    T v(1);
    for (int i = 0; i < N; ++i) v = v * qm;
    T dv(static_cast<double>(N));
    for (int i = 0; i < N - 1; ++i) dv = dv * qm;
    T gap = v - E;
    T psi_in(1);
    T dpsi_in = -root(gap) - dv / (T(4) * gap);
    q = qm;
    while (q > match) {
      double hd = step_size(N, e_est, to_double(q) - 0.25);
      T h = hd < to_double(q - match) ? T(hd) : q - match;
      step(q, -h, psi_in, dpsi_in);
      renormalize(psi_in, dpsi_in);
      q -= h;
    }
    T wr = psi_out * dpsi_in - dpsi_out * psi_in;
    T n_out = root(psi_out * psi_out + dpsi_out * dpsi_out);
    T n_in = root(psi_in * psi_in + dpsi_in * dpsi_in);
    return wr / (n_out * n_in);
  }
};

double wronskian_double(int N, bool neumann, double E, const Domain& d) {
  Shooter<double> s{N, E, 1e-18, 80, {}, {}};
  return s.wronskian(neumann, d);
}

BigReal wronskian_big(int N, bool neumann, const BigReal& E, const Domain& d, int work_digits) {
  PrecisionScope scope(work_digits);
  Shooter<BigReal> s{N, E, num::ten_to_minus(work_digits), 20 * work_digits + 200, {}, {}};
  return s.wronskian(neumann, d);
}

// Predicted energy at counting value x from (b0/2pi) E^mu = x.
double predicted_energy(double b0, double mu, double x) {
  if (x <= 0) return 0;
  return std::pow(2 * M_PI * x / b0, 1.0 / mu);
}

// Illinois regula falsi on a sign-changing bracket.
template <class T, class F>
T illinois(F&& f, T lo, T hi, T flo, T fhi, const T& rel_tol, int max_iter) {
  int side = 0;
  for (int it = 0; it < max_iter; ++it) {
    if (magnitude(hi - lo) <= rel_tol * magnitude(hi)) break;
    T mid = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(mid > lo && mid < hi)) mid = (lo + hi) / T(2);
    T fm = f(mid);
    if (fm == T(0)) return mid;
    if ((fm > T(0)) == (fhi > T(0))) {
      hi = mid;
      fhi = fm;
      if (side == -1) flo = flo / T(2);
      side = -1;
    } else {
      lo = mid;
      flo = fm;
      if (side == 1) fhi = fhi / T(2);
      side = 1;
    }
  }
  return (lo * fhi - hi * flo) / (fhi - flo);
}

struct Located {
  double estimate;
  double lo, hi;
};

Located locate(int N, bool neumann, double lo, double hi, const Domain& d) {
  for (int samples : {12, 48, 192}) {
    std::vector<double> grid, vals;
    for (int i = 0; i <= samples; ++i) {
      double e = lo + (hi - lo) * i / samples;
      grid.push_back(e);
      vals.push_back(wronskian_double(N, neumann, e, d));
    }
    int changes = 0, at = -1;
    for (int i = 0; i < samples; ++i) {
      if ((vals[static_cast<std::size_t>(i)] > 0) != (vals[static_cast<std::size_t>(i) + 1] > 0)) {
        ++changes;
        at = i;
      }
    }
    if (changes == 1) {
      auto ui = static_cast<std::size_t>(at);
      double a = grid[ui], b = grid[ui + 1];
      auto f = [&](double e) { return wronskian_double(N, neumann, e, d); };
      double r = illinois<double>(f, a, b, vals[ui], vals[ui + 1], 1e-15, 200);
      return {r, lo, hi};
    }
  }
  throw Error(ErrorCode::bracket_failure, "eigenvalues: could not isolate a single root in [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

struct Polished {
  BigReal value;
  bool certified;
};

Polished polish(int N, bool neumann, const Located& loc, const Domain& d, int digits, int work) {
  PrecisionScope scope(work);
  auto f = [&](const BigReal& e) { return wronskian_big(N, neumann, e, d, work); };
  BigReal e0(loc.estimate);
  BigReal lo, hi, flo, fhi;
  bool bracketed = false;
  for (double delta = 1e-12; delta < 1; delta *= 100) {
    lo = num::max(e0 * BigReal(1 - delta), BigReal(loc.lo));
    hi = num::min(e0 * BigReal(1 + delta), BigReal(loc.hi));
    flo = f(lo);
    fhi = f(hi);
    if (flo.sign() != fhi.sign()) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    throw Error(ErrorCode::bracket_failure,
                "eigenvalues: lost the root near " + std::to_string(loc.estimate) + " during refinement");
  }
  BigReal root_e = illinois<BigReal>(f, lo, hi, flo, fhi, num::ten_to_minus(digits + 3), 200);
  BigReal eps = num::ten_to_minus(digits);
  BigReal below = f(root_e * (BigReal(1) - eps));
  BigReal above = f(root_e * (BigReal(1) + eps));
  return {root_e, below.sign() != 0 && above.sign() != 0 && below.sign() != above.sign()};
}

}  // namespace

BigReal matching_wronskian(int N, Parity parity, const BigReal& E, const BigReal& domain_E, int digits) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "matching_wronskian: N must be at least 1");
  if (parity == Parity::both) throw Error(ErrorCode::invalid_argument, "matching_wronskian: parity must be + or -");
  Domain d = make_domain(N, domain_E.to_double(), digits);
  return wronskian_big(N, parity == Parity::plus, E, d, digits + num::kGuardDigits);
}

SpectrumRecord eigenvalues(int N, Parity parity, int count, int digits) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "eigenvalues: N must be at least 1");
  if (count < 1) throw Error(ErrorCode::invalid_argument, "eigenvalues: count must be at least 1");
  if (digits < 1) throw Error(ErrorCode::invalid_argument, "eigenvalues: digits must be positive");
  if (parity == Parity::both) throw Error(ErrorCode::invalid_argument, "eigenvalues: parity must be + or -");
  bool neumann = parity == Parity::plus;
  double b0 = zeta::bohr_sommerfeld_b0(N, 20).to_double();
  double mu = (N + 2.0) / (2.0 * N);
  SpectrumRecord rec;
  rec.N = N;
  rec.parity = parity;
  for (int j = 0; j < count; ++j) {
    int k = 2 * j + (neumann ? 0 : 1);
    double lo = predicted_energy(b0, mu, k - 0.5);
    double hi = predicted_energy(b0, mu, k + 1.5);
    Domain coarse = make_domain(N, hi, 16);
    Located loc = locate(N, neumann, lo, hi, coarse);
    Domain fine = make_domain(N, hi, digits);
    Polished p{};
    bool ok = false;
    for (int extra : {num::kGuardDigits, 2 * num::kGuardDigits + 10}) {
      p = polish(N, neumann, loc, fine, digits, digits + extra);
      if (p.certified) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw Error(ErrorCode::certification_failure,
                  "eigenvalues: sign test failed for E_" + std::to_string(k) + " at " + std::to_string(digits) + " digits");
    }
    rec.eigenvalues.push_back(p.value);
    rec.certified_digits.push_back(digits);
  }
  return rec;
}

SpectrumRecord merge(const SpectrumRecord& plus, const SpectrumRecord& minus) {
  if (plus.parity != Parity::plus || minus.parity != Parity::minus || plus.N != minus.N) {
    throw Error(ErrorCode::invalid_argument, "merge: need a plus and a minus record of the same N");
  }
  SpectrumRecord out;
  out.N = plus.N;
  out.parity = Parity::both;
  // Keep a contiguous run of levels 0, 1, 2, ... when the records differ in length.
  std::size_t np = std::min(plus.size(), minus.size() + 1);
  std::size_t nm = std::min(minus.size(), np);
  for (std::size_t j = 0; j < np; ++j) {
    out.eigenvalues.push_back(plus.eigenvalues[j]);
    out.certified_digits.push_back(plus.certified_digits[j]);
    if (j < nm) {
      out.eigenvalues.push_back(minus.eigenvalues[j]);
      out.certified_digits.push_back(minus.certified_digits[j]);
    }
  }
  return out;
}

SpectrumRecord split(const SpectrumRecord& merged, Parity parity) {
  if (merged.parity != Parity::both) throw Error(ErrorCode::invalid_argument, "split: record is not merged");
  if (parity == Parity::both) throw Error(ErrorCode::invalid_argument, "split: parity must be + or -");
  SpectrumRecord out;
  out.N = merged.N;
  out.parity = parity;
  for (std::size_t j = parity == Parity::plus ? 0 : 1; j < merged.size(); j += 2) {
    out.eigenvalues.push_back(merged.eigenvalues[j]);
    out.certified_digits.push_back(merged.certified_digits[j]);
  }
  return out;
}

CountingDiagnostic counting_check(const SpectrumRecord& record) {
  if (record.size() < 5) throw Error(ErrorCode::insufficient_spectrum, "counting_check: need at least 5 eigenvalues");
  double b0 = zeta::bohr_sommerfeld_b0(record.N, 20).to_double();
  double mu = (record.N + 2.0) / (2.0 * record.N);
  CountingDiagnostic diag;
  std::vector<double> xs;
  for (std::size_t j = 0; j < record.size(); ++j) {
    double x = b0 / (2 * M_PI) * std::pow(record.eigenvalues[j].to_double(), mu);
    xs.push_back(x);
    diag.residuals.push_back(x - (record.full_index(j) + 0.5));
  }
  double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double y = record.full_index(j);
    sx += xs[j];
    sy += y;
    sxx += xs[j] * xs[j];
    sxy += xs[j] * y;
  }
  diag.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  diag.intercept = (sy - diag.slope * sx) / n;
  // Consecutive entries are one (merged) or two (single parity) quantum numbers apart;
  // a missing level shifts the residual of every later entry by that spacing.
  double spacing = record.parity == Parity::both ? 1.0 : 2.0;
  for (std::size_t j = 1; j < diag.residuals.size(); ++j) {
    if (std::fabs(diag.residuals[j] - diag.residuals[j - 1]) > 0.5 * spacing) {
      diag.missed_eigenvalue_suspected = true;
      diag.suspect_position = static_cast<int>(j);
      break;
    }
  }
  return diag;
}

std::string to_json(const SpectrumRecord& record, int indent) {
  nlohmann::json j;
  j["N"] = record.N;
  j["parity"] = to_string(record.parity);
  auto& rows = j["eigenvalues"] = nlohmann::json::array();
  for (std::size_t i = 0; i < record.size(); ++i) {
    int digits = record.certified_digits[i];
    rows.push_back({{"k", record.full_index(i)},
                    {"E", record.eigenvalues[i].to_string(digits + 2)},
                    {"certified_digits", digits}});
  }
  return j.dump(indent);
}

SpectrumRecord spectrum_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("spectrum json: ") + e.what());
  }
  try {
    SpectrumRecord rec;
    rec.N = j.at("N").get<int>();
    rec.parity = parity_from_string(j.at("parity").get<std::string>());
    int max_digits = 0;
    for (const auto& row : j.at("eigenvalues")) max_digits = std::max(max_digits, row.at("certified_digits").get<int>());
    PrecisionScope scope(max_digits + num::kGuardDigits);
    for (const auto& row : j.at("eigenvalues")) {
      rec.eigenvalues.emplace_back(row.at("E").get<std::string>());
      rec.certified_digits.push_back(row.at("certified_digits").get<int>());
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("spectrum json: ") + e.what());
  }
}

std::string to_csv(const SpectrumRecord& record) {
  std::ostringstream out;
  out << "N,parity,k,E,certified_digits\n";
  for (std::size_t i = 0; i < record.size(); ++i) {
    int digits = record.certified_digits[i];
    out << record.N << ',' << to_string(record.parity) << ',' << record.full_index(i) << ','
        << record.eigenvalues[i].to_string(digits + 2) << ',' << digits << '\n';
  }
  return out.str();
}

}  // namespace hz::spec
