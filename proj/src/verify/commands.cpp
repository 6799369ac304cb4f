#include "hzeta/closedforms.hpp"
#include "hzeta/error.hpp"
#include "hzeta/verify.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>

namespace hz::verify {

using nlohmann::json;
using num::BigComplex;
using num::BigReal;
using num::PrecisionScope;
using alg::ZKind;
using alg::ZSymbol;
using rules::Classification;
using spec::Parity;
using zeta::ZetaKind;
using zeta::ZetaValue;

namespace {

BigReal cf(const std::string& id, int param, int digits) { return rules::closed_form_eval(id, param, digits); }

std::string symbol_label(int N, Classification c) {
  std::string base = "Z_" + std::to_string(N);
  switch (c) {
    case Classification::Zfull: return base;
    case Classification::Ztwisted: return base + "^P";
    case Classification::Zplus: return base + "^+";
    case Classification::Zminus: return base + "^-";
    case Classification::Zprime0: return base + "'";
    case Classification::generic: return "*";
  }
  return "?";
}

ZSymbol basic_symbol(Classification c, int n) {
  switch (c) {
    case Classification::Zfull: return alg::Zf(n);
    case Classification::Ztwisted: return alg::Zt(n);
    case Classification::Zplus: return alg::Zp(n);
    case Classification::Zminus: return alg::Zm(n);
    default: break;
  }
  throw Error(ErrorCode::internal_inconsistency, "no basic symbol for this classification");
}

// Exact value of (N, kind, n) when the catalog has one.
std::optional<BigReal> closed_value(int N, ZetaKind kind, int n, int digits) {
  auto pick = [&](const BigReal& full, const BigReal& tw) -> BigReal {
    switch (kind) {
      case ZetaKind::full: return full;
      case ZetaKind::twisted: return tw;
      case ZetaKind::plus: return (full + tw) / BigReal(2);
      case ZetaKind::minus: return (full - tw) / BigReal(2);
    }
    return full;
  };
  if (N == 1) {
    BigReal p = rules::airy_zeta_value(true, n, digits), m = rules::airy_zeta_value(false, n, digits);
    if (kind == ZetaKind::plus) return p;
    if (kind == ZetaKind::minus) return m;
    return pick(p + m, p - m);
  }
  if (n == 1) return pick(cf("Z1.full", N, digits), cf("Z1.twisted", N, digits));
  if (N == 2) return pick(cf("Z2.dirichlet.full", n, digits), cf("Z2.dirichlet.twisted", n, digits));
  if (N == 3 && n == 2) {
    BigReal full = cf("Z3.full2", 0, digits), minus = cf("Z3minus2", 0, digits);
    return pick(full, full - BigReal(2) * minus);
  }
  if (N == 6 && n == 2 && kind == ZetaKind::twisted) return cf("Z6P2", 0, digits);
  return std::nullopt;
}

std::string parity_word(Parity p) { return p == Parity::plus ? "plus" : p == Parity::minus ? "minus" : "both"; }

std::string render_spectra(const std::vector<spec::SpectrumRecord>& records, OutputFormat f, int digits) {
  std::ostringstream out;
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(json::parse(spec::to_json(r)));
    out << arr.dump(2) << "\n";
  } else if (f == OutputFormat::csv) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::string csv = spec::to_csv(records[i]);
      if (i > 0) csv = csv.substr(csv.find('\n') + 1);
      out << csv;
    }
  } else {
    for (const auto& r : records) {
      out << "N=" << r.N << " parity=" << parity_word(r.parity) << " count=" << r.size() << "\n";
      for (std::size_t j = 0; j < r.size(); ++j) {
        out << "  k=" << r.full_index(j) << "  E=" << r.eigenvalues[j].to_string(digits) << "  ("
            << r.certified_digits[j] << " digits)\n";
      }
    }
  }
  return out.str();
}

}  // namespace

std::string spectrum_command(const RunConfig& config, const std::string& parity) {
  config.validate();
  Parity p = parity == "both" ? Parity::both : spec::parity_from_string(parity);
  std::vector<spec::SpectrumRecord> records;
  for (int N : config.Ns) {
    if (p == Parity::both) {
      // The lowest `count` levels of the full line.
      int np = (config.count + 1) / 2, nm = config.count / 2;
      auto plus = spec::eigenvalues(N, Parity::plus, np, config.digits);
      auto minus = nm > 0 ? spec::eigenvalues(N, Parity::minus, nm, config.digits) : spec::SpectrumRecord{};
      if (nm == 0) {
        minus.N = N;
        minus.parity = Parity::minus;
      }
      records.push_back(spec::merge(plus, minus));
    } else {
      records.push_back(spec::eigenvalues(N, p, config.count, config.digits));
    }
  }
  return render_spectra(records, config.format, config.digits);
}

std::string zeta_command(const RunConfig& config, const std::string& kind, zeta::TailModel model) {
  config.validate();
  std::vector<ZetaKind> kinds;
  if (kind == "all") {
    kinds = {ZetaKind::full, ZetaKind::twisted, ZetaKind::plus, ZetaKind::minus};
  } else {
    kinds = {zeta::zeta_kind_from_string(kind)};
  }
  const int p = config.digits;
  PrecisionScope scope(p + num::kGuardDigits);
  std::vector<ZetaValue> values;
  for (int N : config.Ns) {
    std::optional<spec::SpectrumRecord> all;
    auto coeffs = zeta::bohr_sommerfeld(N, p);
    for (auto k : kinds) {
      for (int n = 1; n <= std::max(config.n_max, 1); ++n) {
        if (auto v = closed_value(N, k, n, p)) {
          ZetaValue z;
          z.N = N;
          z.kind = k;
          z.order = n;
          z.value = *v;
          z.method = zeta::ZetaMethod::closed_form;
          z.certified_digits = p;
          z.error_bound = std::pow(10.0, -p) * std::fabs(v->to_double());
          values.push_back(std::move(z));
          continue;
        }
        if (!all) {
          all = spec::merge(spec::eigenvalues(N, Parity::plus, config.count, p),
                            spec::eigenvalues(N, Parity::minus, config.count, p));
        }
        values.push_back(zeta::zeta_em(k, BigReal(n), *all, coeffs, {model, p}));
      }
    }
  }
  std::ostringstream out;
  if (config.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(json::parse(zeta::to_json(v)));
    out << arr.dump(2) << "\n";
  } else if (config.format == OutputFormat::csv) {
    out << zeta::to_csv(values);
  } else {
    for (const auto& v : values) {
      out << "N=" << v.N << " " << zeta::to_string(v.kind) << " n=" << v.order << "  "
          << v.value.to_string(std::max(v.certified_digits, 1)) << "  (" << zeta::to_string(v.method) << ", "
          << v.certified_digits << " digits)\n";
    }
  }
  return out.str();
}

std::string derive_command(const RunConfig& config) {
  config.validate();
  std::vector<rules::SumRuleIdentity> all;
  for (int N : config.Ns) {
    for (auto& id : rules::derive_sum_rules(N, config.n_max)) {
      if (id.order > 0 && !id.degenerate &&
          (!id.rhs.is_homogeneous(id.order) || !id.lhs.is_homogeneous(id.order) || id.rhs.max_order() >= id.order)) {
        throw Error(ErrorCode::internal_inconsistency,
                    "identity N=" + std::to_string(N) + " n=" + std::to_string(id.order) + " is not homogeneous");
      }
      all.push_back(std::move(id));
    }
  }
  if (config.format == OutputFormat::json) return rules::to_json(all) + "\n";
  if (config.format == OutputFormat::csv) {
    std::ostringstream out;
    out << "N,n,classification,degenerate,identity\n";
    for (const auto& id : all) {
      out << id.N << "," << id.order << "," << rules::to_string(id.classification) << ","
          << (id.degenerate ? "true" : "false") << ",\"" << id.to_string() << "\"\n";
    }
    return out.str();
  }
  return rules::to_text(all);
}

std::vector<TableCell> table_cells(int N, int n_max, int digits) {
  PrecisionScope scope(digits + num::kGuardDigits);
  std::vector<TableCell> cells;
  auto ids = rules::derive_sum_rules(N, std::max(n_max, 1));
  std::map<ZSymbol, BigReal> known;
  known[alg::Zt(1)] = cf("Z1.twisted", N, digits);
  for (int n = 0; n <= n_max; ++n) {
    TableCell c;
    c.N = N;
    c.n = n;
    c.classification = rules::classify_lhs(N, n);
    c.label = symbol_label(N, c.classification);
    std::string sn = "(" + std::to_string(n) + ")";
    if (n == 0) {
      c.has_closed_form = true;
      c.value_of = "Z_" + std::to_string(N) + "'(0)";
      c.value = cf("Z0.fullPrime", N, digits);
    } else if (c.classification == Classification::generic) {
      if (n == 1) {
        c.has_closed_form = true;
        c.value_of = "Z_" + std::to_string(N) + "^P(1)";
        c.value = known.at(alg::Zt(1));
      }
    } else if (N == 1 || N == 2) {
      ZetaKind k = c.classification == Classification::Zfull      ? ZetaKind::full
                   : c.classification == Classification::Ztwisted ? ZetaKind::twisted
                   : c.classification == Classification::Zplus    ? ZetaKind::plus
                                                                  : ZetaKind::minus;
      c.has_closed_form = true;
      c.value_of = c.label + sn;
      c.value = *closed_value(N, k, n, digits);
    } else {
      // Solve the identity when every right-side symbol is already known.
      auto id = rules::convert_basis(ids.at(static_cast<std::size_t>(n)), c.classification == Classification::Zplus ||
                                                                                 c.classification == Classification::Zminus
                                                                             ? rules::Basis::plusminus
                                                                             : rules::Basis::fulltwisted);
      bool solvable = true;
      for (const auto& s : id.rhs.symbols())
        if (s.kind != ZKind::Pi && !known.count(s)) solvable = false;
      if (solvable) {
        ZSymbol target = basic_symbol(c.classification, n);
        BigComplex coef = id.lhs.linear_coefficient(target).embed(digits);
        BigComplex v = id.rhs.evaluate(
            [&](ZSymbol s) {
              if (s.kind == ZKind::Pi) return BigComplex(num::pi());
              return BigComplex(known.at(s));
            },
            digits);
        BigReal value = (v.re * coef.re + v.im * coef.im) / num::norm(coef);
        c.has_closed_form = true;
        c.value_of = c.label + sn;
        c.value = value;
        if (c.classification == Classification::Ztwisted) known[alg::Zt(n)] = value;
      }
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

std::string table_command(const RunConfig& config) {
  config.validate();
  const int shown = std::min(config.digits, 15);
  std::vector<std::vector<TableCell>> columns;
  for (int N : config.Ns) columns.push_back(table_cells(N, config.n_max, config.digits));
  std::ostringstream out;
  if (config.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& col : columns) {
      for (const auto& c : col) {
        json j = {{"N", c.N},
                  {"n", c.n},
                  {"classification", rules::to_string(c.classification)},
                  {"label", c.label},
                  {"closed_form", c.has_closed_form}};
        if (c.has_closed_form) {
          j["value_of"] = c.value_of;
          j["value"] = c.value.to_string(config.digits);
        }
        arr.push_back(j);
      }
    }
    out << arr.dump(2) << "\n";
    return out.str();
  }
  if (config.format == OutputFormat::csv) {
    out << "N,n,classification,label,closed_form,value_of,value\n";
    for (const auto& col : columns) {
      for (const auto& c : col) {
        out << c.N << "," << c.n << "," << rules::to_string(c.classification) << "," << c.label << ","
            << (c.has_closed_form ? "true" : "false") << "," << c.value_of << ","
            << (c.has_closed_form ? c.value.to_string(config.digits) : "") << "\n";
      }
    }
    return out.str();
  }
  // Text: one grid for even N and one for odd N, then the values.
  for (int parity : {0, 1}) {
    std::vector<const std::vector<TableCell>*> group;
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (config.Ns[i] % 2 == parity) group.push_back(&columns[i]);
    if (group.empty()) continue;
    out << (parity == 0 ? "even N" : "odd N") << " (L_N = " << (parity == 0 ? "N/2+1" : "N+2")
        << "); [..] = no closed form\n";
    out << "  n\\N";
    char buf[64];
    for (const auto* col : group) {
      std::snprintf(buf, sizeof buf, "%12d", col->front().N);
      out << buf;
    }
    out << "\n";
    for (int n = 0; n <= config.n_max; ++n) {
      std::snprintf(buf, sizeof buf, "%5d", n);
      out << buf;
      for (const auto* col : group) {
        const auto& c = (*col)[static_cast<std::size_t>(n)];
        std::string text = c.label;
        if (c.classification != Classification::generic && !c.has_closed_form) text = "[" + text + "]";
        std::snprintf(buf, sizeof buf, "%12s", text.c_str());
        out << buf;
      }
      out << "\n";
    }
    out << "\n";
  }
  for (const auto& col : columns) {
    for (const auto& c : col) {
      if (c.has_closed_form) {
        out << "N=" << c.N << " n=" << c.n << "  " << c.value_of << " = " << c.value.to_string(shown) << "\n";
      } else if (c.classification != Classification::generic) {
        out << "N=" << c.N << " n=" << c.n << "  " << c.label << "(" << c.n << "): no closed form\n";
      }
    }
  }
  return out.str();
}

}  // namespace hz::verify
