#include "hzeta/error.hpp"
#include "hzeta/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hz::verify {

using nlohmann::json;

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

OutputFormat output_format_from_string(const std::string& s) {
  for (auto f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv})
    if (to_string(f) == s) return f;
  throw Error(ErrorCode::invalid_argument, "unknown output format '" + s + "' (text, json or csv)");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::invalid_argument, key + ": '" + value + "' is not an integer");
  }
  return v;
}

}  // namespace

std::vector<int> parse_N_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int("N", item));
    } else {
      int lo = parse_int("N", trim(item.substr(0, dash))), hi = parse_int("N", trim(item.substr(dash + 1)));
      if (hi < lo) throw Error(ErrorCode::invalid_argument, "N: empty range '" + item + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    }
  }
  if (out.empty()) throw Error(ErrorCode::invalid_argument, "N: empty list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void RunConfig::validate() const {
  if (digits < 15 || digits > 500) throw Error(ErrorCode::invalid_argument, "digits must lie in 15..500");
  if (count < 1 || count > 500) throw Error(ErrorCode::invalid_argument, "count must lie in 1..500");
  if (n_max < 0 || n_max > 24) throw Error(ErrorCode::invalid_argument, "nmax must lie in 0..24");
  if (Ns.empty()) throw Error(ErrorCode::invalid_argument, "the N list is empty");
  for (int N : Ns)
    if (N < 1 || N > 40) throw Error(ErrorCode::invalid_argument, "every N must lie in 1..40");
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  std::string value = trim(raw);
  if (key == "digits") {
    digits = parse_int(key, value);
  } else if (key == "count") {
    count = parse_int(key, value);
  } else if (key == "N") {
    Ns = parse_N_list(value);
  } else if (key == "nmax") {
    n_max = parse_int(key, value);
  } else if (key == "format") {
    format = output_format_from_string(value);
  } else if (key == "out") {
    out_path = value;
  } else if (key == "timing") {
    if (value != "true" && value != "false") throw Error(ErrorCode::invalid_argument, "timing must be true or false");
    show_timing = value == "true";
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown config key '" + key + "'");
  }
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read config file '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::invalid_argument, path + ":" + std::to_string(number) + ": expected key = value");
    }
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

namespace {

std::string sci(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string render(const VerificationReport& r, OutputFormat format, bool show_timing) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text: {
      out << "verification: digits=" << r.digits << " count=" << r.count << " N=" << join(r.Ns)
          << " nmax=" << r.n_max << "\n";
      for (const auto& c : r.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << "[" << c.criterion << "] " << c.id << "  residual " << sci(c.residual)
            << " tol " << sci(c.tolerance) << " digits " << c.digits_agreed << "\n      " << c.anchor
            << "\n      expected " << c.symbolic << "\n      got      " << c.numeric << "\n";
      }
      auto failures = r.failures();
      out << r.checks.size() << " checks, " << failures.size() << " failed\n";
      for (const auto* f : failures) out << "failed: " << f->id << "\n";
      if (show_timing) out << "time: " << r.seconds << " s\n";
      break;
    }
    case OutputFormat::json: {
      json j;
      j["digits"] = r.digits;
      j["count"] = r.count;
      j["nmax"] = r.n_max;
      j["N"] = r.Ns;
      j["passed"] = r.passed();
      if (show_timing) j["seconds"] = r.seconds;
      json checks = json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"criterion", c.criterion},
                          {"N", c.N},
                          {"anchor", c.anchor},
                          {"symbolic", c.symbolic},
                          {"numeric", c.numeric},
                          {"residual", number_or_null(c.residual)},
                          {"tolerance", c.tolerance},
                          {"digits_agreed", c.digits_agreed},
                          {"pass", c.pass}});
      }
      j["checks"] = checks;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      out << "id,criterion,N,anchor,symbolic,numeric,residual,tolerance,digits_agreed,pass\n";
      for (const auto& c : r.checks) {
        out << csv_field(c.id) << "," << c.criterion << "," << c.N << "," << csv_field(c.anchor) << ","
            << csv_field(c.symbolic) << "," << csv_field(c.numeric) << "," << sci(c.residual) << ","
            << sci(c.tolerance) << "," << c.digits_agreed << "," << (c.pass ? "pass" : "fail") << "\n";
      }
      break;
    }
  }
  return out.str();
}

VerificationReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    VerificationReport r;
    r.digits = j.at("digits").get<int>();
    r.count = j.at("count").get<int>();
    r.n_max = j.at("nmax").get<int>();
    r.Ns = j.at("N").get<std::vector<int>>();
    if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
    for (const auto& c : j.at("checks")) {
      CheckRecord k;
      k.id = c.at("id").get<std::string>();
      k.criterion = c.at("criterion").get<int>();
      k.N = c.at("N").get<int>();
      k.anchor = c.at("anchor").get<std::string>();
      k.symbolic = c.at("symbolic").get<std::string>();
      k.numeric = c.at("numeric").get<std::string>();
      k.residual = c.at("residual").is_null() ? INFINITY : c.at("residual").get<double>();
      k.tolerance = c.at("tolerance").get<double>();
      k.digits_agreed = c.at("digits_agreed").get<int>();
      k.pass = c.at("pass").get<bool>();
      r.checks.push_back(std::move(k));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("report json: ") + e.what());
  }
}

}  // namespace hz::verify
