// Command-line front end: spectrum, zeta, derive, verify and table.
#include "hzeta/hzeta.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

struct CallError : std::runtime_error {
  hz_status status;
  CallError(hz_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(hz_status s, const std::string& context) {
  if (s == HZ_OK) return;
  throw CallError(s, context + ": " + hz_last_error() + " [" + hz_status_name(s) + "]");
}

struct Text {
  char* p = nullptr;
  ~Text() { hz_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Config = std::unique_ptr<hz_config, decltype(&hz_config_free)>;
using Report = std::unique_ptr<hz_report, decltype(&hz_report_free)>;

struct Options {
  std::string config_path;
  std::optional<std::string> N, count, digits, nmax, format, out;
  bool timing = false;
  std::string parity = "both";
  std::string kind = "all";
  std::string model = "fitted";
};

Config build_config(const Options& o) {
  hz_config* raw = nullptr;
  check(hz_config_new(&raw), "config");
  Config c(raw, hz_config_free);
  if (!o.config_path.empty()) check(hz_config_load(c.get(), o.config_path.c_str()), "config file");
  std::vector<std::pair<const char*, const std::optional<std::string>*>> flags = {
      {"N", &o.N}, {"count", &o.count}, {"digits", &o.digits},
      {"nmax", &o.nmax}, {"format", &o.format}, {"out", &o.out}};
  for (auto& [key, value] : flags) {
    if (*value) check(hz_config_set(c.get(), key, (*value)->c_str()), std::string("--") + key);
  }
  if (o.timing) check(hz_config_set(c.get(), "timing", "true"), "--timing");
  check(hz_config_validate(c.get()), "config");
  return c;
}

void emit(const hz_config* c, const std::string& body) {
  Text out;
  check(hz_config_get(c, "out", &out.p), "config");
  if (out.str().empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream f(out.str(), std::ios::binary);
  f << body;
  if (!f) throw CallError(HZ_IO_ERROR, "cannot write '" + out.str() + "'");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-c,--config", o.config_path, "Config file of key = value lines")->check(CLI::ExistingFile);
  sub->add_option("--N", o.N, "N list, e.g. 3 or 1,2,6 or 1-4");
  sub->add_option("--count", o.count, "Eigenvalues per parity");
  sub->add_option("--digits", o.digits, "Decimal digits");
  sub->add_option("--nmax", o.nmax, "Largest order");
  sub->add_option("--format", o.format, "text, json or csv");
  sub->add_option("--out", o.out, "Output file instead of standard output");
  sub->add_flag("--timing", o.timing, "Include wall-clock time in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, spectral zeta values and exact sum rules of -d^2/dq^2 + |q|^N"};
  app.set_version_flag("--version", hz_version());
  app.require_subcommand(1);

  Options o;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues for each N");
  add_common(spectrum, o);
  spectrum->add_option("--parity", o.parity, "+, - or both (count is split between parities)")
      ->check(CLI::IsMember({"+", "-", "plus", "minus", "both"}));

  auto* zeta = app.add_subcommand("zeta", "Spectral zeta values for orders 1..nmax");
  add_common(zeta, o);
  zeta->add_option("--kind", o.kind, "full, twisted, plus, minus or all")
      ->check(CLI::IsMember({"full", "twisted", "plus", "minus", "all"}));
  zeta->add_option("--model", o.model, "Tail model for numeric sums: fitted or two-term")
      ->check(CLI::IsMember({"fitted", "two-term"}));

  auto* derive = app.add_subcommand("derive", "Exact sum rules up to order nmax");
  add_common(derive, o);
  auto* verify = app.add_subcommand("verify", "Cross-check identities against numerics");
  add_common(verify, o);
  auto* table = app.add_subcommand("table", "Classification table with closed-form values");
  add_common(table, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Config c = build_config(o);
    Text body;
    if (spectrum->parsed()) {
      check(hz_run_spectrum(c.get(), o.parity.c_str(), &body.p), "spectrum");
    } else if (zeta->parsed()) {
      check(hz_run_zeta(c.get(), o.kind.c_str(), o.model.c_str(), &body.p), "zeta");
    } else if (derive->parsed()) {
      check(hz_run_derive(c.get(), &body.p), "derive");
    } else if (table->parsed()) {
      check(hz_run_table(c.get(), &body.p), "table");
    } else if (verify->parsed()) {
      hz_report* raw = nullptr;
      check(hz_run_verify(c.get(), &raw), "verify");
      Report report(raw, hz_report_free);
      check(hz_report_render(report.get(), nullptr, &body.p), "render");
      emit(c.get(), body.str());
      if (hz_report_passed(report.get())) return kExitOk;
      std::size_t n = hz_report_failure_count(report.get());
      std::cerr << n << " of " << hz_report_check_count(report.get()) << " checks failed:\n";
      for (std::size_t i = 0; i < n; ++i) {
        Text id;
        check(hz_report_failure_id(report.get(), i, &id.p), "report");
        std::cerr << "  " << id.str() << '\n';
      }
      return kExitFailures;
    }
    emit(c.get(), body.str());
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "hzeta_cli: " << e.what() << '\n';
    return kExitError;
  }
}
