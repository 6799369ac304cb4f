#include "hzeta/closedforms.hpp"

#include <functional>
#include <map>

namespace hz::rules {

using num::BigReal;
using num::IntegerSequenceKind;
using num::PrecisionScope;

enum class Op {
  rational, pi, euler_gamma, gamma, sin_pi, tan_pi, int_seq, hyper, zeta, beta, airy_coeff, airy_zeta,
  add, sub, mul, div, neg, pow, log, abs
};

struct Expr::Node {
  Op op;
  Rational q;  // rational value, Gamma/sin/tan argument, or exponent
  long index = 0;
  IntegerSequenceKind kind = IntegerSequenceKind::bernoulli;
  std::array<Rational, 4> upper{};
  std::array<Rational, 3> lower{};
  std::shared_ptr<const Node> a, b;
};

namespace {

std::shared_ptr<Expr::Node> leaf(Op op) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  return n;
}

BigReal eval_node(const Expr::Node& n, int digits);

BigReal eval_ptr(const std::shared_ptr<const Expr::Node>& p, int digits) { return eval_node(*p, digits); }

BigReal eval_node(const Expr::Node& n, int digits) {
  switch (n.op) {
    case Op::rational: return BigReal(n.q);
    case Op::pi: return num::pi();
    case Op::euler_gamma: return num::euler_gamma();
    case Op::gamma: return num::gamma(n.q, digits);
    case Op::sin_pi: return num::sin(num::pi() * BigReal(n.q));
    case Op::tan_pi: return num::tan(num::pi() * BigReal(n.q));
    case Op::int_seq: return BigReal(num::integer_sequence(n.kind, static_cast<int>(n.index)));
    case Op::hyper:
      return num::hyper_4f3(std::span<const Rational, 4>(n.upper), std::span<const Rational, 3>(n.lower), digits);
    case Op::zeta: return num::riemann_zeta(BigReal(static_cast<long>(n.index)));
    case Op::beta: return num::dirichlet_beta(BigReal(static_cast<long>(n.index)), digits);
    case Op::airy_coeff: return num::airy_taylor_coefficient(static_cast<int>(n.index), digits);
    case Op::airy_zeta: return airy_zeta_value(n.q > 0, static_cast<int>(n.index), digits);
    case Op::add: return eval_ptr(n.a, digits) + eval_ptr(n.b, digits);
    case Op::sub: return eval_ptr(n.a, digits) - eval_ptr(n.b, digits);
    case Op::mul: return eval_ptr(n.a, digits) * eval_ptr(n.b, digits);
    case Op::div: {
      BigReal d = eval_ptr(n.b, digits);
      if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "closed form: division by zero");
      return eval_ptr(n.a, digits) / d;
    }
    case Op::neg: return -eval_ptr(n.a, digits);
    case Op::pow: {
      BigReal base = eval_ptr(n.a, digits);
      if (denominator(n.q) == 1) return num::pow(base, static_cast<long>(numerator(n.q)));
      return num::pow(base, BigReal(n.q));
    }
    case Op::log: return num::log(eval_ptr(n.a, digits));
    case Op::abs: return num::abs(eval_ptr(n.a, digits));
  }
  throw Error(ErrorCode::internal_inconsistency, "closed form: unknown node");
}

std::string node_string(const Expr::Node& n) {
  auto sub = [](const std::shared_ptr<const Expr::Node>& p) { return node_string(*p); };
  switch (n.op) {
    case Op::rational: return n.q.str();
    case Op::pi: return "pi";
    case Op::euler_gamma: return "euler_gamma";
    case Op::gamma: return "Gamma(" + n.q.str() + ")";
    case Op::sin_pi: return "sin(" + n.q.str() + "*pi)";
    case Op::tan_pi: return "tan(" + n.q.str() + "*pi)";
    case Op::int_seq: {
      const char* name = n.kind == IntegerSequenceKind::bernoulli ? "B"
                         : n.kind == IntegerSequenceKind::euler   ? "E"
                                                                  : "G";
      return std::string(name) + "_" + std::to_string(n.index);
    }
    case Op::hyper: {
      std::string s = "4F3(";
      for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + n.upper[i].str();
      s += ";";
      for (std::size_t i = 0; i < 3; ++i) s += (i ? "," : "") + n.lower[i].str();
      return s + ";1)";
    }
    case Op::zeta: return "zeta(" + std::to_string(n.index) + ")";
    case Op::beta: return "beta(" + std::to_string(n.index) + ")";
    case Op::airy_coeff: return "Ai^(" + std::to_string(n.index) + ")(0)";
    case Op::airy_zeta: return std::string(n.q > 0 ? "AiryZplus(" : "AiryZminus(") + std::to_string(n.index) + ")";
    case Op::add: return "(" + sub(n.a) + " + " + sub(n.b) + ")";
    case Op::sub: return "(" + sub(n.a) + " - " + sub(n.b) + ")";
    case Op::mul: return sub(n.a) + "*" + sub(n.b);
    case Op::div: return sub(n.a) + "/(" + sub(n.b) + ")";
    case Op::neg: return "-(" + sub(n.a) + ")";
    case Op::pow: return "(" + sub(n.a) + ")^(" + n.q.str() + ")";
    case Op::log: return "log(" + sub(n.a) + ")";
    case Op::abs: return "|" + sub(n.a) + "|";
  }
  return "?";
}

}  // namespace

Expr Expr::rational(const Rational& q) {
  auto n = leaf(Op::rational);
  n->q = q;
  return Expr(n);
}
Expr Expr::pi() { return Expr(leaf(Op::pi)); }
Expr Expr::euler_gamma() { return Expr(leaf(Op::euler_gamma)); }
Expr Expr::gamma(const Rational& x) {
  if (x <= 0 && denominator(x) == 1) throw Error(ErrorCode::gamma_pole, "closed form: Gamma pole");
  auto n = leaf(Op::gamma);
  n->q = x;
  return Expr(n);
}
Expr Expr::sin_pi(const Rational& x) {
  auto n = leaf(Op::sin_pi);
  n->q = x;
  return Expr(n);
}
Expr Expr::tan_pi(const Rational& x) {
  auto n = leaf(Op::tan_pi);
  n->q = x;
  return Expr(n);
}
Expr Expr::int_seq(IntegerSequenceKind kind, int index) {
  auto n = leaf(Op::int_seq);
  n->kind = kind;
  n->index = index;
  return Expr(n);
}
Expr Expr::hyper4f3(const std::array<Rational, 4>& upper, const std::array<Rational, 3>& lower) {
  auto n = leaf(Op::hyper);
  n->upper = upper;
  n->lower = lower;
  return Expr(n);
}
Expr Expr::riemann_zeta(long s) {
  auto n = leaf(Op::zeta);
  n->index = s;
  return Expr(n);
}
Expr Expr::dirichlet_beta(long s) {
  auto n = leaf(Op::beta);
  n->index = s;
  return Expr(n);
}
Expr Expr::airy_coefficient(int k) {
  auto n = leaf(Op::airy_coeff);
  n->index = k;
  return Expr(n);
}
Expr Expr::airy_zeta(bool plus, int k) {
  auto n = leaf(Op::airy_zeta);
  n->q = plus ? 1 : -1;
  n->index = k;
  return Expr(n);
}

Expr operator+(const Expr& a, const Expr& b) {
  auto n = leaf(Op::add);
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}
Expr operator-(const Expr& a, const Expr& b) {
  auto n = leaf(Op::sub);
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}
Expr operator*(const Expr& a, const Expr& b) {
  auto n = leaf(Op::mul);
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}
Expr operator/(const Expr& a, const Expr& b) {
  auto n = leaf(Op::div);
  n->a = a.node_;
  n->b = b.node_;
  return Expr(n);
}
Expr Expr::operator-() const {
  auto n = leaf(Op::neg);
  n->a = node_;
  return Expr(n);
}
Expr pow(const Expr& base, const Rational& exponent) {
  auto n = leaf(Op::pow);
  n->a = base.node_;
  n->q = exponent;
  return Expr(n);
}
Expr log(const Expr& x) {
  auto n = leaf(Op::log);
  n->a = x.node_;
  return Expr(n);
}
Expr abs(const Expr& x) {
  auto n = leaf(Op::abs);
  n->a = x.node_;
  return Expr(n);
}
Expr sqrt(const Expr& x) { return pow(x, Rational(1, 2)); }

BigReal Expr::eval(int digits) const {
  PrecisionScope scope(digits + num::kGuardDigits);
  return eval_node(*node_, digits + num::kGuardDigits);
}

std::string Expr::to_string() const { return node_string(*node_); }

BigReal airy_zeta_value(bool plus, int n, int digits) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "airy_zeta_value: order must be at least 1");
  int work = digits + num::kGuardDigits + n;
  PrecisionScope scope(work);
  // Taylor coefficients of Ai (minus) or Ai' (plus) at 0.
  std::vector<BigReal> b(static_cast<std::size_t>(n) + 1);
  BigReal fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact = fact * BigReal(k);
    b[static_cast<std::size_t>(k)] = num::airy_taylor_coefficient(plus ? k + 1 : k, work) / fact;
  }
  std::vector<BigReal> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    BigReal acc = b[static_cast<std::size_t>(k)] / b[0];
    for (int j = 1; j < k; ++j) {
      acc -= BigReal(j) * c[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)] / b[0] / BigReal(k);
    }
    c[static_cast<std::size_t>(k)] = acc;
  }
  // log D = -Z'(0) - sum Z(n) (-lambda)^n / n
  BigReal z = -BigReal(n) * c[static_cast<std::size_t>(n)];
  if (z.is_zero()) return BigReal(0);
  return (n % 2 == 0) ? z : -z;
}

namespace {

using R = Rational;
using E = Expr;

E q(long p, long r = 1) { return E::rational(R(p, r)); }
E qpow(long p, long r, R e) { return pow(q(p, r), e); }

void require_N(int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "closed form: degree N must be at least 1");
}

R nu_of(int N) { return R(1, N + 2); }

E z1_twisted(int N) {
  require_N(N);
  R nu = nu_of(N);
  return sqrt(E::pi()) / q(2) * pow(E::rational(2 * nu), 2 * N * nu) * E::gamma(2 * nu) * E::gamma(3 * nu) /
         (E::gamma(1 - nu) * E::gamma(2 * nu + R(1, 2)));
}

E rho() { return qpow(3, 1, R(5, 6)) / (q(2) * E::pi()) * pow(E::gamma(R(2, 3)), 2); }
E sqrt2() { return sqrt(q(2)); }
E sqrt5() { return sqrt(q(5)); }
E golden() { return (q(1) + sqrt5()) / q(2); }
E factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return E::rational(R(f));
}

struct Builder {
  ClosedFormEntry entry;
  std::function<E(int)> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = [] {
    std::vector<Builder> t;
    auto add = [&](std::string id, std::string param, std::string desc, std::function<E(int)> f) {
      t.push_back({{std::move(id), std::move(param), std::move(desc)}, std::move(f)});
    };
    add("Z0.twistedPrime", "N", "(Z_N^P)'(0) = log[nu^(N nu) Gamma(nu)/Gamma(1-nu)]", [](int N) {
      require_N(N);
      R nu = nu_of(N);
      return log(pow(E::rational(nu), N * nu) * E::gamma(nu) / E::gamma(1 - nu));
    });
    add("Z0.fullPrime", "N", "Z_N'(0) = log sin(nu pi)", [](int N) {
      require_N(N);
      return log(E::sin_pi(nu_of(N)));
    });
    add("Z1.twisted", "N", "Z_N^P(1) = sqrt(pi)/2 (2nu)^(2N nu) Gamma(2nu)Gamma(3nu)/(Gamma(1-nu)Gamma(2nu+1/2))",
        z1_twisted);
    add("Z1.full", "N", "Z_N(1) = tan(2 nu pi)/tan(nu pi) Z_N^P(1); N = 2 gives the finite part (gamma + log 2)/2",
        [](int N) {
          require_N(N);
          if (N == 2) return (E::euler_gamma() + log(q(2))) / q(2);
          R nu = nu_of(N);
          return E::tan_pi(2 * nu) / E::tan_pi(nu) * z1_twisted(N);
        });
    add("ZN2", "N",
        "cot(nu pi)sin(4nu pi)Z^P(2) - cos(4nu pi)Z(2) = pi(2nu)^(4N nu)/4 [Gamma(nu)Gamma(3nu)/(Gamma(1-2nu)Gamma(2nu+1/2))]^2",
        [](int N) {
          require_N(N);
          R nu = nu_of(N);
          return E::pi() * pow(E::rational(2 * nu), 4 * N * nu) / q(4) *
                 pow(E::gamma(nu) * E::gamma(3 * nu) / (E::gamma(1 - 2 * nu) * E::gamma(2 * nu + R(1, 2))), 2);
        });
    add("Z6P1", "none", "Z_6^P(1) = 2^(-7/4) pi Gamma(5/4)/Gamma(7/8)^2", [](int) {
      return qpow(2, 1, R(-7, 4)) * E::pi() * E::gamma(R(5, 4)) / pow(E::gamma(R(7, 8)), 2);
    });
    add("Z6P2", "none", "Z_6^P(2) = (1/8)[pi Gamma(5/4)]^2/Gamma(7/8)^4", [](int) {
      return q(1, 8) * pow(E::pi() * E::gamma(R(5, 4)), 2) / pow(E::gamma(R(7, 8)), 4);
    });
    add("Z4E", "none", "(1+sqrt2)Z_6^P(3) + Z_6(3) = (3+sqrt2) 2^(-19/4)[pi Gamma(5/4)]^3/Gamma(7/8)^6", [](int) {
      return (q(3) + sqrt2()) * qpow(2, 1, R(-19, 4)) * pow(E::pi() * E::gamma(R(5, 4)), 3) /
             pow(E::gamma(R(7, 8)), 6);
    });
    add("Z3P1", "none", "Z_3^P(1) = (2/5)^(1/5) phi^(-1) sqrt(pi) Gamma(6/5)/Gamma(9/10)", [](int) {
      return qpow(2, 5, R(1, 5)) / golden() * sqrt(E::pi()) * E::gamma(R(6, 5)) / E::gamma(R(9, 10));
    });
    add("Z3plus2", "none", "Z_3^+(2) = (2/5)^(2/5) phi^(-1) pi [Gamma(6/5)/Gamma(9/10)]^2", [](int) {
      return qpow(2, 5, R(2, 5)) / golden() * E::pi() * pow(E::gamma(R(6, 5)) / E::gamma(R(9, 10)), 2);
    });
    add("Z3.full2", "none",
        "Z_3(2) = Z_3^P(1)^2 + (2/5)^(2/5)[(5-sqrt5)/(8pi)]^(1/2) Gamma(3/5)Gamma(4/5)/Gamma(13/10) 4F3(4/10,5/10,6/10,1;12/10,13/10,14/10;1)",
        [](int) {
          E f = E::hyper4f3({R(4, 10), R(5, 10), R(6, 10), R(1)}, {R(12, 10), R(13, 10), R(14, 10)});
          return pow(z1_twisted(3), 2) + qpow(2, 5, R(2, 5)) * sqrt((q(5) - sqrt5()) / (q(8) * E::pi())) *
                                             E::gamma(R(3, 5)) * E::gamma(R(4, 5)) / E::gamma(R(13, 10)) * f;
        });
    add("Z3minus2", "none",
        "Z_3^-(2) = (2/5)^(7/5) Gamma(7/10)Gamma(4/5)/(3 sqrt(pi) Gamma(7/5)) 4F3(6/10,7/10,8/10,1;14/10,15/10,16/10;1)",
        [](int) {
          E f = E::hyper4f3({R(6, 10), R(7, 10), R(8, 10), R(1)}, {R(14, 10), R(15, 10), R(16, 10)});
          return qpow(2, 5, R(7, 5)) * E::gamma(R(7, 10)) * E::gamma(R(4, 5)) /
                 (q(3) * sqrt(E::pi()) * E::gamma(R(7, 5))) * f;
        });
    add("ZP2.full", "m", "Z_2(2m) = pi^(2m) |G_2m| / (4 (2m)!)", [](int m) {
      if (m < 1) throw Error(ErrorCode::invalid_argument, "ZP2.full: m must be at least 1");
      return pow(E::pi(), R(2 * m)) * abs(E::int_seq(IntegerSequenceKind::genocchi, 2 * m)) /
             (q(4) * factorial(2 * m));
    });
    add("ZP2.twisted", "m", "Z_2^P(2m+1) = (pi/2)^(2m+1) |E_2m| / (2 (2m)!)", [](int m) {
      if (m < 0) throw Error(ErrorCode::invalid_argument, "ZP2.twisted: m must be nonnegative");
      return pow(E::pi() / q(2), R(2 * m + 1)) * abs(E::int_seq(IntegerSequenceKind::euler, 2 * m)) /
             (q(2) * factorial(2 * m));
    });
    add("Z2.dirichlet.full", "s", "Z_2(s) = (1 - 2^-s) zeta(s)", [](int s) {
      if (s < 2) throw Error(ErrorCode::zeta_pole, "Z2.dirichlet.full: s must be at least 2");
      return (q(1) - pow(q(2), R(-s))) * E::riemann_zeta(s);
    });
    add("Z2.dirichlet.twisted", "s", "Z_2^P(s) = beta(s)", [](int s) {
      if (s < 1) throw Error(ErrorCode::invalid_argument, "Z2.dirichlet.twisted: s must be at least 1");
      return E::dirichlet_beta(s);
    });
    add("RO", "none", "rho = 3^(5/6) (2 pi)^-1 Gamma(2/3)^2", [](int) { return rho(); });
    add("Airy.n", "n", "Ai^(n)(0) = 3^((n-2)/3) pi^-1 sin(2(n+1)pi/3) Gamma((n+1)/3)", [](int n) {
      if (n < 0) throw Error(ErrorCode::invalid_argument, "Airy.n: n must be nonnegative");
      return E::airy_coefficient(n);
    });
    add("Airy.plusPrime0", "none", "Z_1^+'(0) = (1/2) log[sqrt3/(2 rho)]",
        [](int) { return log(sqrt(q(3)) / (q(2) * rho())) / q(2); });
    add("Airy.minusPrime0", "none", "Z_1^-'(0) = (1/2) log[sqrt3 rho/2]",
        [](int) { return log(sqrt(q(3)) * rho() / q(2)) / q(2); });
    add("Airy.plus1", "none", "Z_1^+(1) = 0 (regularized)", [](int) { return q(0); });
    add("Airy.minus1", "none", "Z_1^-(1) = -rho (regularized)", [](int) { return -rho(); });
    add("Airy.plus2", "none", "Z_1^+(2) = 1/rho", [](int) { return q(1) / rho(); });
    add("Airy.minus2", "none", "Z_1^-(2) = rho^2", [](int) { return pow(rho(), 2); });
    add("Airy.plus3", "none", "Z_1^+(3) = 1", [](int) { return q(1); });
    add("Airy.minus3", "none", "Z_1^-(3) = 1/2 - rho^3", [](int) { return q(1, 2) - pow(rho(), 3); });
    add("Airy.plus", "n", "Z_1^+(n) from the Taylor series of log Ai'(lambda)", [](int n) {
      if (n < 1) throw Error(ErrorCode::invalid_argument, "Airy.plus: n must be at least 1");
      return E::airy_zeta(true, n);
    });
    add("Airy.minus", "n", "Z_1^-(n) from the Taylor series of log Ai(lambda)", [](int n) {
      if (n < 1) throw Error(ErrorCode::invalid_argument, "Airy.minus: n must be at least 1");
      return E::airy_zeta(false, n);
    });
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<ClosedFormEntry>& closed_form_catalog() {
  static const std::vector<ClosedFormEntry> entries = [] {
    std::vector<ClosedFormEntry> out;
    for (const auto& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return entries;
}

Expr closed_form_expr(const std::string& id, int param) {
  for (const auto& b : builders()) {
    if (b.entry.id == id) return b.build(param);
  }
  throw Error(ErrorCode::unknown_identifier, "unknown closed-form identifier '" + id + "'");
}

BigReal closed_form_eval(const std::string& id, int param, int digits) {
  if (digits < 1) throw Error(ErrorCode::invalid_argument, "closed_form_eval: digits must be positive");
  return closed_form_expr(id, param).eval(digits);
}

}  // namespace hz::rules
