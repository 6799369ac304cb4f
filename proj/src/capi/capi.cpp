#include "hzeta/hzeta.h"

#include "hzeta/closedforms.hpp"
#include "hzeta/error.hpp"
#include "hzeta/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct hz_config {
  hz::verify::RunConfig config;
};

struct hz_spectrum {
  hz::spec::SpectrumRecord record;
};

struct hz_report {
  hz::verify::VerificationReport report;
  hz::verify::OutputFormat format = hz::verify::OutputFormat::text;
  bool show_timing = false;
};

namespace {

thread_local std::string last_error;

hz_status fail(hz_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs body, mapping library errors onto status codes.
template <class F>
hz_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return HZ_OK;
  } catch (const hz::Error& e) {
    return fail(static_cast<hz_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HZ_UNEXPECTED, "out of memory");
  } catch (const std::exception& e) {
    return fail(HZ_UNEXPECTED, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define HZ_REQUIRE(ptr)                                            \
  do {                                                             \
    if (!(ptr)) return fail(HZ_NULL_ARGUMENT, #ptr " is NULL");    \
  } while (0)

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

extern "C" {

const char* hz_version(void) { return "1.0.0"; }

const char* hz_status_name(hz_status status) {
  switch (status) {
    case HZ_OK: return "ok";
    case HZ_NULL_ARGUMENT: return "null_argument";
    case HZ_UNEXPECTED: return "unexpected";
    default:
      if (status >= HZ_INVALID_ARGUMENT && status <= HZ_IO_ERROR) {
        return hz::to_string(static_cast<hz::ErrorCode>(static_cast<int>(status)));
      }
      return "unknown";
  }
}

const char* hz_last_error(void) { return last_error.c_str(); }

void hz_string_free(char* s) { std::free(s); }

hz_status hz_config_new(hz_config** out) {
  HZ_REQUIRE(out);
  return guard([&] { *out = new hz_config(); });
}

void hz_config_free(hz_config* config) { delete config; }

hz_status hz_config_set(hz_config* config, const char* key, const char* value) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(key);
  HZ_REQUIRE(value);
  return guard([&] { config->config.set(key, value); });
}

hz_status hz_config_load(hz_config* config, const char* path) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(path);
  return guard([&] { config->config = hz::verify::load_config(path, config->config); });
}

hz_status hz_config_get(const hz_config* config, const char* key, char** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(key);
  HZ_REQUIRE(out);
  return guard([&] {
    const auto& c = config->config;
    std::string k = key, v;
    if (k == "digits") v = std::to_string(c.digits);
    else if (k == "count") v = std::to_string(c.count);
    else if (k == "N") v = join(c.Ns);
    else if (k == "nmax") v = std::to_string(c.n_max);
    else if (k == "format") v = hz::verify::to_string(c.format);
    else if (k == "out") v = c.out_path;
    else if (k == "timing") v = c.show_timing ? "true" : "false";
    else throw hz::Error(hz::ErrorCode::invalid_argument, "unknown config key '" + k + "'");
    *out = dup(v);
  });
}

hz_status hz_config_validate(const hz_config* config) {
  HZ_REQUIRE(config);
  return guard([&] { config->config.validate(); });
}

hz_status hz_spectrum_compute(int N, const char* parity, int count, int digits, hz_spectrum** out) {
  HZ_REQUIRE(parity);
  HZ_REQUIRE(out);
  return guard([&] {
    auto p = hz::spec::parity_from_string(parity);
    auto rec = hz::spec::eigenvalues(N, p, count, digits);
    *out = new hz_spectrum{std::move(rec)};
  });
}

void hz_spectrum_free(hz_spectrum* spectrum) { delete spectrum; }

hz_status hz_spectrum_size(const hz_spectrum* spectrum, size_t* out) {
  HZ_REQUIRE(spectrum);
  HZ_REQUIRE(out);
  *out = spectrum->record.size();
  return HZ_OK;
}

hz_status hz_spectrum_eigenvalue(const hz_spectrum* spectrum, size_t index, int digits, char** out) {
  HZ_REQUIRE(spectrum);
  HZ_REQUIRE(out);
  return guard([&] {
    if (index >= spectrum->record.size()) throw hz::Error(hz::ErrorCode::invalid_argument, "index out of range");
    if (digits < 1) throw hz::Error(hz::ErrorCode::invalid_argument, "digits must be positive");
    *out = dup(spectrum->record.eigenvalues[index].to_string(digits));
  });
}

hz_status hz_spectrum_export(const hz_spectrum* spectrum, const char* format, char** out) {
  HZ_REQUIRE(spectrum);
  HZ_REQUIRE(format);
  HZ_REQUIRE(out);
  return guard([&] {
    std::string f = format;
    if (f == "json") *out = dup(hz::spec::to_json(spectrum->record));
    else if (f == "csv") *out = dup(hz::spec::to_csv(spectrum->record));
    else throw hz::Error(hz::ErrorCode::invalid_argument, "spectrum export format must be json or csv");
  });
}

hz_status hz_spectrum_import(const char* json, hz_spectrum** out) {
  HZ_REQUIRE(json);
  HZ_REQUIRE(out);
  return guard([&] { *out = new hz_spectrum{hz::spec::spectrum_from_json(json)}; });
}

hz_status hz_closed_form(const char* id, int param, int digits, char** out) {
  HZ_REQUIRE(id);
  HZ_REQUIRE(out);
  return guard([&] {
    if (digits < 1) throw hz::Error(hz::ErrorCode::invalid_argument, "digits must be positive");
    *out = dup(hz::rules::closed_form_eval(id, param, digits).to_string(digits));
  });
}

hz_status hz_closed_form_catalog(char** out) {
  HZ_REQUIRE(out);
  return guard([&] {
    std::string s;
    for (const auto& e : hz::rules::closed_form_catalog()) s += e.id + "\t" + e.parameter + "\t" + e.description + "\n";
    *out = dup(s);
  });
}

hz_status hz_run_spectrum(const hz_config* config, const char* parity, char** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(parity);
  HZ_REQUIRE(out);
  return guard([&] { *out = dup(hz::verify::spectrum_command(config->config, parity)); });
}

hz_status hz_run_zeta(const hz_config* config, const char* kind, const char* model, char** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(kind);
  HZ_REQUIRE(model);
  HZ_REQUIRE(out);
  return guard([&] {
    *out = dup(hz::verify::zeta_command(config->config, kind, hz::zeta::tail_model_from_string(model)));
  });
}

hz_status hz_run_derive(const hz_config* config, char** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(out);
  return guard([&] { *out = dup(hz::verify::derive_command(config->config)); });
}

hz_status hz_run_table(const hz_config* config, char** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(out);
  return guard([&] { *out = dup(hz::verify::table_command(config->config)); });
}

hz_status hz_run_verify(const hz_config* config, hz_report** out) {
  HZ_REQUIRE(config);
  HZ_REQUIRE(out);
  return guard([&] {
    auto r = hz::verify::run_verification(config->config);
    *out = new hz_report{std::move(r), config->config.format, config->config.show_timing};
  });
}

void hz_report_free(hz_report* report) { delete report; }

int hz_report_passed(const hz_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t hz_report_check_count(const hz_report* report) { return report ? report->report.checks.size() : 0; }

size_t hz_report_failure_count(const hz_report* report) { return report ? report->report.failures().size() : 0; }

hz_status hz_report_failure_id(const hz_report* report, size_t index, char** out) {
  HZ_REQUIRE(report);
  HZ_REQUIRE(out);
  return guard([&] {
    auto f = report->report.failures();
    if (index >= f.size()) throw hz::Error(hz::ErrorCode::invalid_argument, "failure index out of range");
    *out = dup(f[index]->id);
  });
}

hz_status hz_report_render(const hz_report* report, const char* format, char** out) {
  HZ_REQUIRE(report);
  HZ_REQUIRE(out);
  return guard([&] {
    auto f = format ? hz::verify::output_format_from_string(format) : report->format;
    *out = dup(hz::verify::render(report->report, f, report->show_timing));
  });
}

}  // extern "C"
