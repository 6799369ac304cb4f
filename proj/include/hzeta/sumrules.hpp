#ifndef HZETA_SUMRULES_HPP
#define HZETA_SUMRULES_HPP

#include "hzeta/exactalg.hpp"

#include <string>
#include <vector>

namespace hz::rules {

using num::BigReal;
using num::kGuardDigits;
using num::PrecisionScope;
using alg::CycloNumber;
using alg::SymPoly;
using alg::ZSymbol;

enum class Classification { Zfull, Ztwisted, Zplus, Zminus, generic, Zprime0 };
enum class Basis { plusminus, fulltwisted };
enum class Route { factored, literal };

std::string to_string(Classification c);
Classification classification_from_string(const std::string& s);

/// Order of the rotation symmetry: N/2 + 1 for even N, N + 2 for odd N.
int symmetry_order(int N);
/// Conductor 2(N+2) of the coefficient field; its generator is e^{i nu pi}.
int conductor(int N);

/// One order of the sum-rule hierarchy.
///
/// For order >= 1 the identity reads lhs = rhs, lhs linear in order-n symbols and
/// rhs a polynomial in lower-order Ztwisted symbols (and pi for N = 2).
/// For order 0 it reads exp(exp_scale * lhs) = rhs with rhs a constant.
struct SumRuleIdentity {
  int N = 0;
  int order = 0;
  SymPoly lhs;
  SymPoly rhs;
  Classification classification = Classification::generic;
  Basis basis = Basis::fulltwisted;
  bool degenerate = false;
  int exp_scale = 0;

  std::string to_string() const;
  friend bool operator==(const SumRuleIdentity&, const SumRuleIdentity&) = default;
};

Classification classify_lhs(int N, int n);

std::vector<SumRuleIdentity> derive_sum_rules(int N, int n_max, Route route = Route::factored);

/// Rewrites the left side in the chosen basis; the right side keeps its symbols.
SumRuleIdentity convert_basis(const SumRuleIdentity& id, Basis target);

/// The order-n identity with every lower Ztwisted symbol eliminated, leaving Zfull
/// symbols only (and pi for N = 2).
SumRuleIdentity autonomous_full_identity(int N, int n);

/// True when a is an exact nonzero scalar multiple of b (both sides scaled alike).
bool proportional(const SumRuleIdentity& a, const SumRuleIdentity& b);

/// lhs - rhs with symbols replaced by numeric values; for order 0 the residual is
/// exp(exp_scale * lhs) - rhs.
num::BigComplex identity_residual(const SumRuleIdentity& id,
                                  const std::function<num::BigComplex(ZSymbol)>& value, int digits);

/// Identities as JSON: each coefficient is {"conductor": m, "powers": [[k, "p/q"], ...]}
/// listing the nonzero rational multiples of zeta_m^k.
std::string to_json(const std::vector<SumRuleIdentity>& ids, int indent = 2);
std::vector<SumRuleIdentity> identities_from_json(const std::string& text);
/// One canonical text line per identity.
std::string to_text(const std::vector<SumRuleIdentity>& ids);

}  // namespace hz::rules

#endif
