#include "hzeta/numerics.hpp"

#include <mutex>
#include <string>

namespace hz::num {

namespace {

Rational binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

Rational factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

struct SequenceCache {
  std::mutex mutex;
  std::vector<Rational> bernoulli{Rational(1)};
  std::vector<Rational> euler{Rational(1)};     // E_0, E_2, E_4, ...
  std::vector<Rational> genocchi_abs;           // |G_2|, |G_4|, ... via tan(x/2)
};

SequenceCache& cache() {
  static SequenceCache c;
  return c;
}

void extend_bernoulli(std::vector<Rational>& b, int n) {
  while (static_cast<int>(b.size()) <= n) {
    int m = static_cast<int>(b.size());
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[k];
    b.push_back(-acc / (m + 1));
  }
}

// sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0 for m >= 1.
void extend_euler(std::vector<Rational>& e, int m_max) {
  while (static_cast<int>(e.size()) <= m_max) {
    int m = static_cast<int>(e.size());
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += binomial(2 * m, 2 * k) * e[k];
    e.push_back(-acc);
  }
}

// tan(x/2) = sin(x/2)/cos(x/2) by exact series division; its x^{2m-1}
// coefficient is |G_{2m}|/(2m)!.
void extend_genocchi(std::vector<Rational>& g, int m_max) {
  if (static_cast<int>(g.size()) >= m_max) return;
  int order = 2 * m_max;
  std::vector<Rational> s(order + 1), c(order + 1), t(order + 1);
  Rational half_pow = 1;
  for (int k = 0; k <= order; ++k) {
    Rational term = half_pow / factorial(k);
    if (k % 2 == 1) s[k] = ((k / 2) % 2 == 0) ? term : -term;
    else c[k] = ((k / 2) % 2 == 0) ? term : -term;
    half_pow /= 2;
  }
  for (int k = 0; k <= order; ++k) {
    Rational acc = s[k];
    for (int j = 1; j <= k; ++j) acc -= c[j] * t[k - j];
    t[k] = acc / c[0];
  }
  g.clear();
  for (int m = 1; m <= m_max; ++m) g.push_back(t[2 * m - 1] * factorial(2 * m));
}

}  // namespace

Rational bernoulli_number(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "bernoulli_number: negative index");
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  extend_bernoulli(c.bernoulli, n);
  return c.bernoulli[n];
}

Rational bernoulli_polynomial(int n, const Rational& x) {
  Rational acc = 0;
  Rational xp = 1;
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  for (int k = 0; k <= n; ++k) {
    acc += binomial(n, k) * bernoulli_number(n - k) * xp;
    xp *= x;
  }
  return acc;
}

Rational integer_sequence(IntegerSequenceKind kind, int index) {
  if (index < 0 || index % 2 != 0) {
    throw Error(ErrorCode::invalid_argument,
                "integer_sequence: index must be a nonnegative even integer, got " + std::to_string(index));
  }
  int m = index / 2;
  switch (kind) {
    case IntegerSequenceKind::bernoulli:
      return bernoulli_number(index);
    case IntegerSequenceKind::euler: {
      auto& c = cache();
      std::lock_guard lock(c.mutex);
      extend_euler(c.euler, m);
      return c.euler[m];
    }
    case IntegerSequenceKind::genocchi: {
      if (m == 0) return Rational(0);
      auto& c = cache();
      std::lock_guard lock(c.mutex);
      extend_genocchi(c.genocchi_abs, m);
      Rational g = c.genocchi_abs[m - 1];
      return (m % 2 == 1) ? Rational(-g) : g;
    }
  }
  throw Error(ErrorCode::invalid_argument, "integer_sequence: unknown kind");
}

}  // namespace hz::num
