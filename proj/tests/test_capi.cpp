// Exercises the shared library through its C header only.
#include <doctest.h>

#include "hzeta/hzeta.h"

#include <cstdlib>
#include <string>

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  hz_string_free(p);
  return s;
}

struct ConfigHandle {
  hz_config* p = nullptr;
  ConfigHandle() { REQUIRE(hz_config_new(&p) == HZ_OK); }
  ~ConfigHandle() { hz_config_free(p); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(hz_version()).size() > 0);
  CHECK(std::string(hz_status_name(HZ_OK)) == "ok");
  CHECK(std::string(hz_status_name(HZ_ZETA_POLE)) == "zeta-pole");
  CHECK(std::string(hz_status_name(HZ_NULL_ARGUMENT)) == "null_argument");
  CHECK(std::string(hz_status_name(static_cast<hz_status>(55))) == "unknown");
}

TEST_CASE("null arguments are rejected") {
  char* s = nullptr;
  CHECK(hz_config_new(nullptr) == HZ_NULL_ARGUMENT);
  CHECK(std::string(hz_last_error()).find("NULL") != std::string::npos);
  CHECK(hz_config_set(nullptr, "digits", "20") == HZ_NULL_ARGUMENT);
  CHECK(hz_run_derive(nullptr, &s) == HZ_NULL_ARGUMENT);
  CHECK(hz_spectrum_compute(2, nullptr, 3, 20, nullptr) == HZ_NULL_ARGUMENT);
  CHECK(hz_report_passed(nullptr) == 0);
  CHECK(hz_report_check_count(nullptr) == 0);
  hz_config_free(nullptr);
  hz_spectrum_free(nullptr);
  hz_report_free(nullptr);
  hz_string_free(nullptr);
}

TEST_CASE("config set, get and validate") {
  ConfigHandle c;
  char* s = nullptr;
  REQUIRE(hz_config_get(c.p, "digits", &s) == HZ_OK);
  CHECK(take(s) == "50");
  REQUIRE(hz_config_set(c.p, "N", "1-3") == HZ_OK);
  REQUIRE(hz_config_get(c.p, "N", &s) == HZ_OK);
  CHECK(take(s) == "1,2,3");
  CHECK(hz_config_set(c.p, "digits", "abc") == HZ_INVALID_ARGUMENT);
  CHECK(std::string(hz_last_error()).find("digits") != std::string::npos);
  CHECK(hz_config_get(c.p, "nope", &s) == HZ_INVALID_ARGUMENT);
  REQUIRE(hz_config_set(c.p, "digits", "3") == HZ_OK);
  CHECK(hz_config_validate(c.p) == HZ_INVALID_ARGUMENT);
  REQUIRE(hz_config_set(c.p, "digits", "30") == HZ_OK);
  CHECK(hz_config_validate(c.p) == HZ_OK);
  CHECK(std::string(hz_last_error()).empty());
  CHECK(hz_config_load(c.p, "missing/file.cfg") == HZ_IO_ERROR);
}

TEST_CASE("spectrum handles and JSON round trip") {
  hz_spectrum* sp = nullptr;
  REQUIRE(hz_spectrum_compute(2, "+", 4, 25, &sp) == HZ_OK);
  size_t n = 0;
  REQUIRE(hz_spectrum_size(sp, &n) == HZ_OK);
  CHECK(n == 4);
  char* s = nullptr;
  REQUIRE(hz_spectrum_eigenvalue(sp, 2, 10, &s) == HZ_OK);
  CHECK(std::strtod(s, nullptr) == doctest::Approx(9.0));
  hz_string_free(s);
  CHECK(hz_spectrum_eigenvalue(sp, 4, 10, &s) == HZ_INVALID_ARGUMENT);

  REQUIRE(hz_spectrum_export(sp, "json", &s) == HZ_OK);
  std::string json = take(s);
  hz_spectrum* back = nullptr;
  REQUIRE(hz_spectrum_import(json.c_str(), &back) == HZ_OK);
  REQUIRE(hz_spectrum_export(back, "json", &s) == HZ_OK);
  CHECK(take(s) == json);
  REQUIRE(hz_spectrum_export(sp, "csv", &s) == HZ_OK);
  CHECK(take(s).find('\n') != std::string::npos);
  CHECK(hz_spectrum_export(sp, "xml", &s) == HZ_INVALID_ARGUMENT);
  hz_spectrum_free(back);
  hz_spectrum_free(sp);

  CHECK(hz_spectrum_compute(3, "sideways", 4, 25, &sp) == HZ_INVALID_ARGUMENT);
  CHECK(hz_spectrum_import("{", &sp) != HZ_OK);
}

TEST_CASE("closed forms") {
  char* s = nullptr;
  REQUIRE(hz_closed_form("Z6P2", 0, 20, &s) == HZ_OK);
  CHECK(std::strtod(take(s).c_str(), nullptr) == doctest::Approx(0.71895230).epsilon(1e-8));
  CHECK(hz_closed_form("NoSuchEntry", 0, 20, &s) == HZ_UNKNOWN_IDENTIFIER);
  REQUIRE(hz_closed_form_catalog(&s) == HZ_OK);
  CHECK(take(s).find("Z6P2\t") != std::string::npos);
}

TEST_CASE("commands through the C interface") {
  ConfigHandle c;
  REQUIRE(hz_config_set(c.p, "N", "2") == HZ_OK);
  REQUIRE(hz_config_set(c.p, "digits", "20") == HZ_OK);
  REQUIRE(hz_config_set(c.p, "count", "3") == HZ_OK);
  REQUIRE(hz_config_set(c.p, "nmax", "3") == HZ_OK);
  char* s = nullptr;
  REQUIRE(hz_run_spectrum(c.p, "both", &s) == HZ_OK);
  CHECK(take(s).find("5.0000") != std::string::npos);
  REQUIRE(hz_run_derive(c.p, &s) == HZ_OK);
  CHECK(take(s).find("N=2 n=1") != std::string::npos);
  REQUIRE(hz_run_table(c.p, &s) == HZ_OK);
  CHECK(!take(s).empty());
  REQUIRE(hz_run_zeta(c.p, "twisted", "fitted", &s) == HZ_OK);
  CHECK(!take(s).empty());
  CHECK(hz_run_zeta(c.p, "twisted", "guess", &s) == HZ_INVALID_ARGUMENT);
}

TEST_CASE("verification report handle") {
  ConfigHandle c;
  REQUIRE(hz_config_set(c.p, "N", "2") == HZ_OK);
  REQUIRE(hz_config_set(c.p, "digits", "30") == HZ_OK);
  hz_report* r = nullptr;
  REQUIRE(hz_run_verify(c.p, &r) == HZ_OK);
  CHECK(hz_report_passed(r) == 1);
  CHECK(hz_report_check_count(r) > 10);
  CHECK(hz_report_failure_count(r) == 0);
  char* s = nullptr;
  CHECK(hz_report_failure_id(r, 0, &s) == HZ_INVALID_ARGUMENT);
  REQUIRE(hz_report_render(r, nullptr, &s) == HZ_OK);
  CHECK(take(s).find("PASS") != std::string::npos);
  REQUIRE(hz_report_render(r, "json", &s) == HZ_OK);
  CHECK(take(s).front() == '{');
  CHECK(hz_report_render(r, "yaml", &s) == HZ_INVALID_ARGUMENT);
  hz_report_free(r);
}
