#include "hzeta/exactalg.hpp"

#include <memory>
#include <mutex>
#include <numeric>

namespace hz::alg {

using Poly = std::vector<Rational>;

struct CycloField {
  int m = 1;
  int phi = 1;
  Poly modulus;               // monic, degree phi
  std::vector<Poly> powers;   // powers[k] = zeta^k reduced, k < m
};

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Integer> integer_poly_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic; exact division.
  std::vector<Integer> q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1];
    q[i] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
  }
  return q;
}

std::mutex g_mutex;
std::map<int, std::vector<Integer>> g_cyclotomic;
std::map<int, std::unique_ptr<CycloField>> g_fields;

const std::vector<Integer>& cyclotomic_locked(int m) {
  auto it = g_cyclotomic.find(m);
  if (it != g_cyclotomic.end()) return it->second;
  std::vector<Integer> p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = integer_poly_div(p, cyclotomic_locked(d));
  }
  return g_cyclotomic.emplace(m, std::move(p)).first->second;
}

const CycloField* field(int m) {
  std::lock_guard lock(g_mutex);
  auto it = g_fields.find(m);
  if (it != g_fields.end()) return it->second.get();
  auto f = std::make_unique<CycloField>();
  f->m = m;
  const auto& ip = cyclotomic_locked(m);
  f->phi = static_cast<int>(ip.size()) - 1;
  for (const auto& c : ip) f->modulus.emplace_back(c);
  f->powers.resize(static_cast<std::size_t>(m));
  Poly cur(static_cast<std::size_t>(f->phi));
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    f->powers[static_cast<std::size_t>(k)] = cur;
    // multiply by zeta and reduce
    Poly next(static_cast<std::size_t>(f->phi));
    Rational top = cur.back();
    for (int j = f->phi - 1; j >= 1; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    next[0] = 0;
    if (top != 0) {
      for (int j = 0; j < f->phi; ++j) next[static_cast<std::size_t>(j)] -= top * f->modulus[static_cast<std::size_t>(j)];
    }
    cur = std::move(next);
  }
  return g_fields.emplace(m, std::move(f)).first->second.get();
}

// Reduce a polynomial in zeta (arbitrary degree) to the power basis.
Poly reduce(const CycloField* f, const Poly& p) {
  Poly out(static_cast<std::size_t>(f->phi));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (static_cast<int>(k) < f->phi) {
      out[k] += p[k];
      continue;
    }
    const Poly& z = f->powers[k % static_cast<std::size_t>(f->m)];
    for (int j = 0; j < f->phi; ++j) {
      if (z[static_cast<std::size_t>(j)] != 0) out[static_cast<std::size_t>(j)] += p[k] * z[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// Polynomial long division over Q.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  r = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int m) {
  if (m <= 0) throw Error(ErrorCode::invalid_argument, "euler_phi: conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m <= 0) throw Error(ErrorCode::invalid_argument, "cyclotomic_polynomial: conductor must be positive");
  std::lock_guard lock(g_mutex);
  return cyclotomic_locked(m);
}

CycloNumber::CycloNumber() : f_(field(1)), c_{Rational(0)} {}
CycloNumber::CycloNumber(long q) : f_(field(1)), c_{Rational(q)} {}
CycloNumber::CycloNumber(const Rational& q, int m) : f_(nullptr) {
  if (m <= 0) throw Error(ErrorCode::invalid_argument, "CycloNumber: conductor must be positive");
  f_ = field(m);
  c_.assign(static_cast<std::size_t>(f_->phi), Rational(0));
  c_[0] = q;
}

CycloNumber CycloNumber::zeta(int m, long k) {
  if (m <= 0) throw Error(ErrorCode::invalid_argument, "CycloNumber::zeta: conductor must be positive");
  const CycloField* f = field(m);
  long r = ((k % m) + m) % m;
  return CycloNumber(f, f->powers[static_cast<std::size_t>(r)]);
}

int CycloNumber::conductor() const { return f_->m; }
int CycloNumber::degree() const { return f_->phi; }

CycloNumber CycloNumber::lift(int target) const {
  if (target == f_->m) return *this;
  if (target <= 0 || target % f_->m != 0) {
    throw Error(ErrorCode::invalid_argument, "CycloNumber::lift: target conductor is not a multiple");
  }
  const CycloField* g = field(target);
  int step = target / f_->m;
  Poly out(static_cast<std::size_t>(g->phi));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const Poly& z = g->powers[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(target)];
    for (int j = 0; j < g->phi; ++j) out[static_cast<std::size_t>(j)] += c_[k] * z[static_cast<std::size_t>(j)];
  }
  return CycloNumber(g, std::move(out));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return false;
  }
  return true;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::invalid_argument, "CycloNumber: value is not rational");
  return c_[0];
}

CycloNumber CycloNumber::conj() const {
  Poly out(c_.size());
  int m = f_->m;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const Poly& z = f_->powers[static_cast<std::size_t>((m - static_cast<int>(k)) % m)];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[k] * z[j];
  }
  return CycloNumber(f_, std::move(out));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "CycloNumber: division by zero");
  // Extended Euclid: find s with s * a = 1 mod modulus.
  Poly r0 = f_->modulus, r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  Rational inv = Rational(1) / r1[0];
  for (auto& c : s1) c *= inv;
  return CycloNumber(f_, reduce(f_, s1));
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(Rational(1), f_->m);
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {
int common_conductor(int a, int b) { return std::lcm(a, b); }
}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (f_ != o.f_) {
    int m = common_conductor(f_->m, o.f_->m);
    *this = lift(m);
    return *this += o.lift(m);
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (f_ != o.f_) {
    int m = common_conductor(f_->m, o.f_->m);
    *this = lift(m);
    return *this -= o.lift(m);
  }
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.f_->m == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (f_->m == 1) {
    Rational q = c_[0];
    *this = o;
    for (auto& c : c_) c *= q;
    return *this;
  }
  if (f_ != o.f_) {
    int m = common_conductor(f_->m, o.f_->m);
    *this = lift(m);
    return *this *= o.lift(m);
  }
  c_ = reduce(f_, poly_mul(c_, o.c_));
  if (c_.size() < static_cast<std::size_t>(f_->phi)) c_.resize(static_cast<std::size_t>(f_->phi));
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  int m = std::lcm(a.f_->m, b.f_->m);
  return a.lift(m).c_ == b.lift(m).c_;
}

num::BigComplex CycloNumber::embed(int digits) const {
  PrecisionScope scope(digits + kGuardDigits);
  num::BigComplex sum(0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    sum += num::BigComplex::unit_root(2 * static_cast<long>(k), f_->m) * BigReal(c_[k]);
  }
  return sum;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string power;
    if (k > 0) {
      power = "zeta" + std::to_string(f_->m);
      if (k > 1) power += "^" + std::to_string(k);
    }
    if (k == 0) {
      out += c.str();
    } else if (c == 1) {
      out += power;
    } else {
      out += c.str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hz::alg
