#ifndef HZETA_EXACTALG_HPP
#define HZETA_EXACTALG_HPP

#include "hzeta/bigcomplex.hpp"
#include "hzeta/error.hpp"

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hz::alg {

using num::BigReal;
using num::kGuardDigits;
using num::PrecisionScope;

int euler_phi(int m);
/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

struct CycloField;

/// Exact element of Q(zeta_m), zeta_m = e^{2 pi i/m}, stored in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} reduced modulo the cyclotomic polynomial.
class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long q);
  explicit CycloNumber(const Rational& q, int m = 1);

  /// zeta_m^k for any integer k.
  static CycloNumber zeta(int m, long k = 1);

  int conductor() const;
  int degree() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same element viewed in Q(zeta_target); target must be a multiple of the conductor.
  CycloNumber lift(int target) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  CycloNumber conj() const;
  CycloNumber inverse() const;
  CycloNumber pow(long e) const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  num::BigComplex embed(int digits) const;
  /// e.g. "1/2 - 3*zeta10^2"; "0" for zero.
  std::string to_string() const;

 private:
  CycloNumber(const CycloField* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}
  const CycloField* f_;
  std::vector<Rational> c_;
};

enum class ZKind { Zplus, Zminus, Zfull, Ztwisted, ZplusPrime0, ZminusPrime0, Pi };

std::string to_string(ZKind k);
ZKind zkind_from_string(const std::string& s);

/// Pi is an auxiliary weight-one symbol standing for the number pi, needed only
/// by the right side of the harmonic functional equation.
struct ZSymbol {
  ZKind kind = ZKind::Zfull;
  int order = 0;

  int weight() const;
  std::string to_string() const;
  friend auto operator<=>(const ZSymbol&, const ZSymbol&) = default;
};

inline ZSymbol Zp(int n) { return {ZKind::Zplus, n}; }
inline ZSymbol Zm(int n) { return {ZKind::Zminus, n}; }
inline ZSymbol Zf(int n) { return {ZKind::Zfull, n}; }
inline ZSymbol Zt(int n) { return {ZKind::Ztwisted, n}; }
inline ZSymbol PiSym() { return {ZKind::Pi, 1}; }

/// Sorted (symbol, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<ZSymbol, int>>;

int monomial_weight(const Monomial& m);
std::string monomial_to_string(const Monomial& m);

class SymPoly {
 public:
  using Terms = std::map<Monomial, CycloNumber>;

  SymPoly() = default;
  SymPoly(const CycloNumber& c);
  SymPoly(long c) : SymPoly(CycloNumber(c)) {}
  static SymPoly var(ZSymbol s, int exponent = 1);
  static SymPoly term(const Monomial& m, const CycloNumber& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CycloNumber coefficient(const Monomial& m) const;
  CycloNumber constant_term() const { return coefficient({}); }
  /// Coefficient of the degree-one monomial s.
  CycloNumber linear_coefficient(ZSymbol s) const;
  bool is_constant() const;

  /// -1 for the zero polynomial.
  int min_weight() const;
  int max_weight() const;
  bool is_homogeneous(int weight) const;
  std::set<ZSymbol> symbols() const;
  /// Largest order among Z symbols (-1 if none).
  int max_order() const;

  SymPoly substitute(ZSymbol s, const SymPoly& value) const;
  /// Replaces every symbol for which f returns a value.
  SymPoly substitute(const std::function<const SymPoly*(ZSymbol)>& f) const;
  num::BigComplex evaluate(const std::function<num::BigComplex(ZSymbol)>& value, int digits) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const CycloNumber& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const CycloNumber& c) { return a *= c; }
  friend SymPoly operator*(const CycloNumber& c, SymPoly a) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

  /// a += c * b without a temporary.
  void add_scaled(const SymPoly& b, const CycloNumber& c);
  SymPoly pow(int e) const;

  /// Monomials in ascending (kind, order) lexicographic order, each as
  /// "[coefficient]*monomial".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Power series in lambda truncated after order M.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error(ErrorCode::invalid_argument, "TruncSeries: negative order");
  }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const SymPoly& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  SymPoly& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const CycloNumber& c);

 private:
  std::vector<SymPoly> c_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Requires a[0] == 0; otherwise throws nonconstant_term.
TruncSeries series_exp(const TruncSeries& a);
/// Requires a[0] == 1; otherwise throws nonconstant_term.
TruncSeries series_log(const TruncSeries& a);
/// Coefficient n multiplied by factor^n.
TruncSeries rescale_argument(const TruncSeries& a, const CycloNumber& factor);

}  // namespace hz::alg

#endif
