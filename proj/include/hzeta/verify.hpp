#ifndef HZETA_VERIFY_HPP
#define HZETA_VERIFY_HPP

#include "hzeta/spectrum.hpp"
#include "hzeta/sumrules.hpp"
#include "hzeta/zetafns.hpp"

#include <string>
#include <vector>

namespace hz::verify {

enum class OutputFormat { text, json, csv };

std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);

struct RunConfig {
  int digits = 50;
  /// Eigenvalues per parity.
  int count = 12;
  std::vector<int> Ns = {1, 2, 3, 6};
  int n_max = 8;
  OutputFormat format = OutputFormat::text;
  /// Empty for standard output.
  std::string out_path;
  /// Adds the wall-clock time to rendered reports, which then differ between runs.
  bool show_timing = false;

  /// Throws invalid_argument naming the first bad field.
  void validate() const;
  /// Sets one field from its textual form; keys are digits, count, N, nmax, format, out, timing.
  void set(const std::string& key, const std::string& value);
};

/// Reads "key = value" lines; '#' starts a comment.
RunConfig load_config(const std::string& path, RunConfig base = {});
/// Parses "1,2,3" or "1-4" style lists.
std::vector<int> parse_N_list(const std::string& s);

struct CheckRecord {
  std::string id;
  int criterion = 0;
  /// 0 for checks that do not belong to one N.
  int N = 0;
  /// The quoted result this check reproduces.
  std::string anchor;
  std::string symbolic;
  std::string numeric;
  double residual = 0;
  double tolerance = 0;
  int digits_agreed = 0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  int digits = 0;
  int count = 0;
  int n_max = 0;
  std::vector<int> Ns;
  double seconds = 0;

  bool passed() const;
  std::vector<const CheckRecord*> failures() const;
  /// Criteria with at least one check, in increasing order.
  std::vector<int> criteria() const;
  bool criterion_passed(int criterion) const;
};

/// Runs every check that applies to the configured N list; checks that belong
/// to no single N always run. Ordered by criterion, then id.
VerificationReport run_verification(const RunConfig& config);

std::string render(const VerificationReport& report, OutputFormat format, bool show_timing = false);
VerificationReport report_from_json(const std::string& text);

/// Rendered spectra for each N and parity in the config.
std::string spectrum_command(const RunConfig& config, const std::string& parity);
/// Zeta values of one kind ("full", "twisted", "plus", "minus" or "all") for orders
/// 1..n_max; closed forms where the catalog has them, otherwise EM sums.
std::string zeta_command(const RunConfig& config, const std::string& kind, zeta::TailModel model);
std::string derive_command(const RunConfig& config);
/// Synoptic table over the configured N list for orders 0..n_max.
std::string table_command(const RunConfig& config);

/// One table cell: the classification at (N, n) and an exact value where one exists.
struct TableCell {
  int N = 0;
  int n = 0;
  rules::Classification classification = rules::Classification::generic;
  /// Label of the basic value, e.g. "Z_3^+"; "*" for generic cells.
  std::string label;
  bool has_closed_form = false;
  /// What `value` is, e.g. "Z_3^+(2)"; for generic first-order cells the twisted value.
  std::string value_of;
  num::BigReal value;
};

std::vector<TableCell> table_cells(int N, int n_max, int digits);

}  // namespace hz::verify

#endif
