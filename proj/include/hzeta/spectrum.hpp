#ifndef HZETA_SPECTRUM_HPP
#define HZETA_SPECTRUM_HPP

#include "hzeta/bigreal.hpp"

#include <string>
#include <vector>

namespace hz::spec {

using num::BigReal;

/// Neumann (+) or Dirichlet (-) condition at q = 0; `both` marks a merged record.
enum class Parity { plus, minus, both };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Eigenvalues of -d^2/dq^2 + |q|^N for one parity, lowest first.
struct SpectrumRecord {
  int N = 0;
  Parity parity = Parity::plus;
  std::vector<BigReal> eigenvalues;
  std::vector<int> certified_digits;

  std::size_t size() const { return eigenvalues.size(); }
  /// Full-line quantum number of entry j (2j or 2j+1 for a single parity).
  int full_index(std::size_t j) const;
};

/// First `count` eigenvalues of the given parity certified to `digits` significant digits.
/// Throws bracket_failure when the predicted grid cannot isolate a root and
/// certification_failure when the final sign test fails.
SpectrumRecord eigenvalues(int N, Parity parity, int count, int digits = num::kDefaultDigits);

/// Interleaves a plus and a minus record of the same N into a record with parity `both`.
SpectrumRecord merge(const SpectrumRecord& plus, const SpectrumRecord& minus);
/// Even (plus) or odd (minus) entries of a merged record.
SpectrumRecord split(const SpectrumRecord& merged, Parity parity);

/// Matching Wronskian of the outward and inward solutions, evaluated at E with the
/// domain chosen for `domain_E`; its zeros in E are the eigenvalues.
BigReal matching_wronskian(int N, Parity parity, const BigReal& E, const BigReal& domain_E, int digits);

struct CountingDiagnostic {
  /// (b0/2pi) E_k^mu - (k + 1/2) for every entry, in full-line index units.
  std::vector<double> residuals;
  /// Least-squares line k ~ slope * (b0/2pi) E^mu + intercept.
  double slope = 0;
  double intercept = 0;
  bool missed_eigenvalue_suspected = false;
  /// Record position after which the residual jumps, or -1.
  int suspect_position = -1;
};

/// Compares a record against the Bohr-Sommerfeld counting law. Requires >= 5 entries.
CountingDiagnostic counting_check(const SpectrumRecord& record);

std::string to_json(const SpectrumRecord& record, int indent = 2);
SpectrumRecord spectrum_from_json(const std::string& text);
/// Header line "N,parity,k,E,certified_digits" followed by one row per eigenvalue.
std::string to_csv(const SpectrumRecord& record);

}  // namespace hz::spec

#endif
