#ifndef HZETA_CLOSEDFORMS_HPP
#define HZETA_CLOSEDFORMS_HPP

#include "hzeta/numerics.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace hz::rules {

/// Exact expression over rationals, pi, Euler's constant, Gamma at rationals,
/// rational powers, named integer sequences and a few special series.
class Expr {
 public:
  struct Node;

  static Expr rational(const Rational& q);
  static Expr integer(long v) { return rational(Rational(v)); }
  static Expr pi();
  static Expr euler_gamma();
  static Expr gamma(const Rational& x);
  static Expr sin_pi(const Rational& x);
  static Expr tan_pi(const Rational& x);
  static Expr int_seq(num::IntegerSequenceKind kind, int index);
  static Expr hyper4f3(const std::array<Rational, 4>& upper, const std::array<Rational, 3>& lower);
  static Expr riemann_zeta(long s);
  static Expr dirichlet_beta(long s);
  /// Ai^(n)(0) from its Taylor-coefficient formula.
  static Expr airy_coefficient(int n);
  /// Z_1^+(n) or Z_1^-(n) from the Taylor series of log Ai' or log Ai at 0.
  static Expr airy_zeta(bool plus, int n);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  friend Expr pow(const Expr& base, const Rational& exponent);
  friend Expr log(const Expr& x);
  friend Expr abs(const Expr& x);

  num::BigReal eval(int digits) const;
  std::string to_string() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr sqrt(const Expr& x);

struct ClosedFormEntry {
  std::string id;
  /// What the integer parameter means: "none", "N", "m", "s" or "n".
  std::string parameter;
  std::string description;
};

const std::vector<ClosedFormEntry>& closed_form_catalog();
/// Throws unknown_identifier for ids outside the catalog and invalid_argument for
/// parameters outside an entry's domain.
Expr closed_form_expr(const std::string& id, int param = 0);
num::BigReal closed_form_eval(const std::string& id, int param, int digits);

/// Z_1^+(n) / Z_1^-(n) for n >= 1 via the log-Taylor expansion of the Airy determinants.
num::BigReal airy_zeta_value(bool plus, int n, int digits);

}  // namespace hz::rules

#endif
