#ifndef HZETA_ZETAFNS_HPP
#define HZETA_ZETAFNS_HPP

#include "hzeta/bigcomplex.hpp"
#include "hzeta/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hz::zeta {

using num::BigComplex;
using num::BigReal;
using spec::Parity;
using spec::SpectrumRecord;

enum class ZetaKind { full, twisted, plus, minus };
enum class ZetaMethod { direct_em, closed_form, identity_derived };
/// Tail model for the Euler-Maclaurin sum: the fixed two-coefficient form, or a
/// counting law whose subleading coefficients are fitted to the top of the record.
enum class TailModel { two_term, fitted };

std::string to_string(ZetaKind k);
ZetaKind zeta_kind_from_string(const std::string& s);
std::string to_string(ZetaMethod m);
ZetaMethod zeta_method_from_string(const std::string& s);
std::string to_string(TailModel m);
TailModel tail_model_from_string(const std::string& s);

struct ZetaValue {
  int N = 0;
  ZetaKind kind = ZetaKind::full;
  int order = 0;
  BigReal value;
  ZetaMethod method = ZetaMethod::direct_em;
  int certified_digits = 0;
  /// Estimated absolute error behind certified_digits.
  double error_bound = 0;
};

struct BohrSommerfeldCoeffs {
  int N = 0;
  /// (N + 2) / (2N)
  BigReal mu;
  BigReal b0;
  std::optional<BigReal> b1;
};

/// (4/N) Gamma(1/N) Gamma(3/2) / Gamma(1/N + 3/2): the action integral of E = p^2 + |q|^N.
BigReal bohr_sommerfeld_b0(int N, int digits = num::kDefaultDigits);
/// b0 for every N; b1 exactly for N = 3, zero for N = 2, absent otherwise.
BohrSommerfeldCoeffs bohr_sommerfeld(int N, int digits = num::kDefaultDigits);

struct EmOptions {
  TailModel model = TailModel::fitted;
  int digits = num::kDefaultDigits;
};

/// Spectral zeta value from a truncated spectrum plus an Euler-Maclaurin tail.
/// plus/minus read a record of that parity; full/twisted read a merged record.
/// Throws zeta_pole at s = mu for non-alternating kinds, invalid_argument below it,
/// insufficient_spectrum when the record is too short for the chosen model.
ZetaValue zeta_em(ZetaKind kind, const BigReal& s, const SpectrumRecord& record,
                  const BohrSommerfeldCoeffs& coeffs, const EmOptions& options = {});

/// exp(-Z'(0) - sum_n Z(n) (-lambda)^n / n) from values Z(1..n_max) of one kind.
/// `radius` is the lowest relevant eigenvalue. Throws radius_exceeded when
/// |lambda| >= radius and insufficient_terms when the geometric tail bound exceeds
/// 10^-digits relative.
BigComplex determinant_series(const BigComplex& lambda, const std::vector<ZetaValue>& zeta_values,
                              const BigReal& zprime0, const BigReal& radius, int digits = num::kDefaultDigits);
BigReal determinant_series(const BigReal& lambda, const std::vector<ZetaValue>& zeta_values,
                           const BigReal& zprime0, const BigReal& radius, int digits = num::kDefaultDigits);

/// Inputs for both parity determinants of one N.
struct DeterminantData {
  int N = 0;
  std::vector<ZetaValue> plus;   ///< Z^+(1..n)
  std::vector<ZetaValue> minus;  ///< Z^-(1..n)
  BigReal plus_prime0;
  BigReal minus_prime0;
  BigReal plus_radius;
  BigReal minus_radius;
};

/// Per-parity values from closed forms (N = 1, 2 only; n_max orders).
DeterminantData closed_form_determinant_data(int N, int n_max, int digits);
/// Per-parity values from EM sums over the given records; Z(1) from closed forms
/// where the sum diverges (N = 1, 2). Z'(0) always from closed forms.
DeterminantData numeric_determinant_data(const SpectrumRecord& plus, const SpectrumRecord& minus, int n_max,
                                         int digits);

/// |e^{i nu pi} D+(l) D-(w l) - e^{-i nu pi} D+(w l) D-(l) - RHS| with w = e^{4 i nu pi},
/// RHS = 2i, or 2i e^{-i pi l / 4} for N = 2.
BigReal functional_eq_residual(const DeterminantData& data, const BigComplex& lambda, int digits);

std::string to_json(const ZetaValue& v, int indent = 2);
ZetaValue zeta_value_from_json(const std::string& text);
std::string to_csv(const std::vector<ZetaValue>& values);

}  // namespace hz::zeta

#endif
